// cli.cpp
