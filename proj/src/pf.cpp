// pf.cpp
