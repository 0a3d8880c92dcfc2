// functors.cpp

#include "steinberg_lab/functors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace stlab {

namespace {

bool below(const PosetView& p, std::size_t i, std::size_t j) {
    return i != j && contains(p.elements[j], p.elements[i]);
}

bool is_cover(const PosetView& p, std::size_t i, std::size_t j) {
    if (!below(p, i, j)) return false;
    for (std::size_t k = 0; k < p.elements.size(); ++k)
        if (below(p, i, k) && below(p, k, j)) return false;
    return true;
}

// all saturated chains from i to j as index lists
void saturated_chains(const PosetView& p, std::size_t at, std::size_t to,
                      std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
    if (at == to) {
        out.push_back(cur);
        return;
    }
    for (std::size_t k = 0; k < p.elements.size(); ++k)
        if (is_cover(p, at, k) && (k == to || below(p, k, to))) {
            cur.push_back(k);
            saturated_chains(p, k, to, cur, out);
            cur.pop_back();
        }
}

}  // namespace

GF2Matrix PosetFunctor::transition(std::size_t from, std::size_t to) const {
    if (from == to) return GF2Matrix::identity(dims.at(from));
    if (!below(poset, from, to)) throw std::invalid_argument("transition: not comparable");
    GF2Matrix acc = GF2Matrix::identity(dims.at(from));
    std::size_t at = from;
    while (at != to) {
        std::size_t next = poset.elements.size();
        for (std::size_t k = 0; k < poset.elements.size(); ++k)
            if (is_cover(poset, at, k) && (k == to || below(poset, k, to))) {
                next = k;  // elements are sorted, first hit is lex-least
                break;
            }
        if (next == poset.elements.size()) throw std::logic_error("transition: chain stalled");
        acc = cover_maps.at({at, next}) * acc;
        at = next;
    }
    return acc;
}

void PosetFunctor::validate() const {
    if (dims.size() != poset.elements.size())
        throw std::invalid_argument("functor: one dimension per element required");
    auto covers = poset_covers(poset);
    if (cover_maps.size() != covers.size())
        throw std::invalid_argument("functor: one matrix per covering pair required");
    for (auto& [lo, hi] : covers) {
        auto it = cover_maps.find({lo, hi});
        if (it == cover_maps.end()) throw std::invalid_argument("functor: missing cover map");
        if (it->second.rows() != dims[hi] || it->second.cols() != dims[lo])
            throw std::invalid_argument("functor: cover map shape mismatch");
    }
    // exhaustive: composites along all saturated chains agree
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
        for (std::size_t j = 0; j < poset.elements.size(); ++j) {
            if (!below(poset, i, j)) continue;
            std::vector<std::vector<std::size_t>> paths;
            std::vector<std::size_t> cur;
            saturated_chains(poset, i, j, cur, paths);
            GF2Matrix first;
            for (std::size_t pi = 0; pi < paths.size(); ++pi) {
                GF2Matrix acc = GF2Matrix::identity(dims[i]);
                std::size_t at = i;
                for (std::size_t step : paths[pi]) {
                    acc = cover_maps.at({at, step}) * acc;
                    at = step;
                }
                if (pi == 0)
                    first = acc;
                else if (!(acc == first))
                    throw std::invalid_argument("functor: saturated chains disagree");
            }
        }
}

namespace {

PosetFunctor indicator_functor(const PosetView& p, std::vector<bool> on) {
    PosetFunctor f{p, {}, {}};
    for (std::size_t i = 0; i < p.elements.size(); ++i) f.dims.push_back(on[i] ? 1 : 0);
    for (auto& [lo, hi] : poset_covers(p)) {
        GF2Matrix m(f.dims[hi], f.dims[lo]);
        if (on[lo] && on[hi]) m.set(0, 0, true);
        f.cover_maps.emplace(std::pair{lo, hi}, std::move(m));
    }
    return f;
}

}  // namespace

PosetFunctor constant_functor(const PosetView& p, std::size_t d) {
    PosetFunctor f{p, std::vector<std::size_t>(p.elements.size(), d), {}};
    for (auto& [lo, hi] : poset_covers(p))
        f.cover_maps.emplace(std::pair{lo, hi}, GF2Matrix::identity(d));
    return f;
}

PosetFunctor simple_functor(const PosetView& p, const Subspace& w) {
    std::size_t at = p.index_of(w);  // throws when w is not an element
    std::vector<bool> on(p.elements.size(), false);
    on[at] = true;
    // a covering pair never has both ends at w, so every map is forced zero
    return indicator_functor(p, on);
}

PosetFunctor projective_functor(const PosetView& p, const Subspace& w) {
    p.index_of(w);
    std::vector<bool> on;
    for (auto& u : p.elements) on.push_back(contains(u, w));
    return indicator_functor(p, on);
}

PosetFunctor injective_functor(const PosetView& p, const Subspace& w) {
    p.index_of(w);
    std::vector<bool> on;
    for (auto& u : p.elements) on.push_back(contains(w, u));
    return indicator_functor(p, on);
}

PosetFunctor coinduced_functor(const PosetView& p, const Subspace& w) {
    // sections of Hom(-, w) form exactly the interval below w
    return injective_functor(p, w);
}

PosetFunctor restrict_functor(const PosetFunctor& f, const PosetView& sub) {
    PosetFunctor out{sub, {}, {}};
    std::vector<std::size_t> back;
    for (auto& e : sub.elements) back.push_back(f.poset.index_of(e));
    for (std::size_t i = 0; i < sub.elements.size(); ++i) out.dims.push_back(f.dims[back[i]]);
    for (auto& [lo, hi] : poset_covers(sub))
        out.cover_maps.emplace(std::pair{lo, hi}, f.transition(back[lo], back[hi]));
    return out;
}

PosetFunctor random_functor(const PosetView& p, std::uint64_t seed) {
    if (p.elements.empty()) return PosetFunctor{p, {}, {}};
    std::mt19937_64 rng(seed);
    std::size_t nt = 1 + rng() % 3, ns = rng() % 4;
    std::vector<std::size_t> targets, sources;
    for (std::size_t i = 0; i < nt; ++i) targets.push_back(rng() % p.elements.size());
    for (std::size_t j = 0; j < ns; ++j) sources.push_back(rng() % p.elements.size());
    // a map of projective sums is a bit per pair with target below source
    GF2Matrix bits(nt, ns);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < ns; ++j)
            if (contains(p.elements[sources[j]], p.elements[targets[i]]))
                bits.set(i, j, rng() & 1);

    auto active = [&](const std::vector<std::size_t>& gens, std::size_t u) {
        std::vector<std::size_t> idx;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (contains(p.elements[u], p.elements[gens[g]])) idx.push_back(g);
        return idx;
    };

    std::vector<HomologySpace> coker(p.elements.size());
    for (std::size_t u = 0; u < p.elements.size(); ++u) {
        auto ta = active(targets, u), sa = active(sources, u);
        GF2Matrix phi(ta.size(), sa.size());
        for (std::size_t i = 0; i < ta.size(); ++i)
            for (std::size_t j = 0; j < sa.size(); ++j)
                if (bits.get(ta[i], sa[j])) phi.set(i, j, true);
        coker[u] = homology_chart(GF2Matrix(0, ta.size()), phi);
    }

    PosetFunctor out{p, {}, {}};
    for (auto& h : coker) out.dims.push_back(h.dim);
    for (auto& [lo, hi] : poset_covers(p)) {
        auto tlo = active(targets, lo), thi = active(targets, hi);
        GF2Matrix step(thi.size(), tlo.size());
        for (std::size_t i = 0; i < thi.size(); ++i)
            for (std::size_t j = 0; j < tlo.size(); ++j)
                if (thi[i] == tlo[j]) step.set(i, j, true);
        out.cover_maps.emplace(std::pair{lo, hi},
                               coker[hi].coords * (step * coker[lo].reps.transposed()));
    }
    return out;
}

std::size_t LComplex::simplex_index(int k, const Simplex& s) const {
    auto& level = simplices.at(k);
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it == level.end() || *it != s) throw std::out_of_range("simplex not present");
    return it - level.begin();
}

LComplex l_complex(const PosetFunctor& f) {
    LComplex out;
    for (int k = 0;; ++k) {
        auto level = chains(f.poset, k);
        if (level.empty() && k > 0) break;
        if (level.empty() && k == 0) {
            out.simplices.push_back({});
            out.offsets.push_back({});
            out.cx.dims.push_back(0);
            return out;
        }
        std::vector<std::size_t> offs;
        std::size_t total = 0;
        for (auto& s : level) {
            offs.push_back(total);
            total += f.dims[s.back()];  // sup of a chain is its top element
        }
        out.simplices.push_back(std::move(level));
        out.offsets.push_back(std::move(offs));
        out.cx.dims.push_back(total);
    }
    for (std::size_t k = 0; k + 1 < out.cx.dims.size(); ++k) {
        GF2Matrix d(out.cx.dims[k + 1], out.cx.dims[k]);
        auto& hi = out.simplices[k + 1];
        for (std::size_t t = 0; t < hi.size(); ++t)
            for (std::size_t drop = 0; drop < hi[t].size(); ++drop) {
                Simplex face = hi[t];
                face.erase(face.begin() + drop);
                std::size_t s = out.simplex_index(k, face);
                GF2Matrix block = f.transition(face.back(), hi[t].back());
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c)
                        if (block.get(r, c))
                            d.set(out.offsets[k + 1][t] + r, out.offsets[k][s] + c, true);
            }
        out.cx.d.push_back(std::move(d));
    }
    out.cx.validate();
    return out;
}

HomologySpace derived_limit(const PosetFunctor& f, int k) {
    auto l = l_complex(f);
    if (k < 0 || static_cast<std::size_t>(k) >= l.cx.dims.size())
        return HomologySpace{0, GF2Matrix(0, 0), GF2Matrix(0, 0)};
    return l.cx.homology(k);
}

std::vector<std::size_t> derived_limit_dims(const PosetFunctor& f) {
    return l_complex(f).cx.homology_dims();
}

std::size_t limit_dim_equalizer(const PosetFunctor& f) {
    std::vector<std::size_t> offs;
    std::size_t total = 0;
    for (auto d : f.dims) {
        offs.push_back(total);
        total += d;
    }
    auto covers = poset_covers(f.poset);
    std::size_t crows = 0;
    for (auto& [lo, hi] : covers) (void)lo, crows += f.dims[hi];
    GF2Matrix c(crows, total);
    std::size_t at = 0;
    for (auto& [lo, hi] : covers) {
        auto& m = f.cover_maps.at({lo, hi});
        // row block: F(lo->hi) x_lo - x_hi = 0
        for (std::size_t r = 0; r < m.rows(); ++r) {
            for (std::size_t cc = 0; cc < m.cols(); ++cc)
                if (m.get(r, cc)) c.set(at + r, offs[lo] + cc, true);
            c.flip(at + r, offs[hi] + r);
        }
        at += m.rows();
    }
    return total - rank_of(c);
}

std::vector<std::size_t> automorphism_perm(const PosetView& p, const GLElement& g) {
    std::vector<std::size_t> perm;
    for (auto& e : p.elements) perm.push_back(p.index_of(act(g, e)));
    return perm;
}

namespace {

void check_automorphism(const PosetView& p, const std::vector<std::size_t>& perm) {
    if (perm.size() != p.elements.size())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> hit(perm.size(), false);
    for (auto i : perm) {
        if (i >= perm.size() || hit[i]) throw std::invalid_argument("not a permutation");
        hit[i] = true;
    }
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j)
            if (below(p, i, j) != below(p, perm[i], perm[j]))
                throw std::invalid_argument("permutation does not preserve the order");
}

}  // namespace

PosetFunctor compose_with(const PosetFunctor& f, const std::vector<std::size_t>& perm) {
    check_automorphism(f.poset, perm);
    PosetFunctor out{f.poset, {}, {}};
    for (std::size_t i = 0; i < perm.size(); ++i) out.dims.push_back(f.dims[perm[i]]);
    for (auto& [lo, hi] : poset_covers(f.poset))
        out.cover_maps.emplace(std::pair{lo, hi}, f.cover_maps.at({perm[lo], perm[hi]}));
    return out;
}

std::vector<GF2Matrix> lambda_phi(const PosetFunctor& f, const std::vector<std::size_t>& perm) {
    check_automorphism(f.poset, perm);
    auto src = l_complex(f);
    auto dst = l_complex(compose_with(f, perm));
    std::vector<GF2Matrix> levels;
    for (std::size_t k = 0; k < src.cx.dims.size(); ++k) {
        GF2Matrix m(dst.cx.dims[k], src.cx.dims[k]);
        for (std::size_t t = 0; t < dst.simplices[k].size(); ++t) {
            Simplex image;
            for (auto v : dst.simplices[k][t]) image.push_back(perm[v]);
            std::sort(image.begin(), image.end());
            std::size_t s = src.simplex_index(k, image);
            std::size_t d = f.dims[image.back()];
            for (std::size_t r = 0; r < d; ++r)
                m.set(dst.offsets[k][t] + r, src.offsets[k][s] + r, true);
        }
        levels.push_back(std::move(m));
    }
    // chain map: the target cobord composed with the permutation equals the
    // permutation composed with the source cobord
    for (std::size_t k = 0; k + 1 < levels.size(); ++k)
        if (!(dst.cx.d[k] * levels[k] == levels[k + 1] * src.cx.d[k]))
            throw std::logic_error("lambda_phi: not a chain map");
    return levels;
}

SubFunctor make_sub_functor(const PosetFunctor& f, std::vector<GF2Matrix> inclusions) {
    if (inclusions.size() != f.dims.size())
        throw std::invalid_argument("sub-functor: one basis per element");
    SubFunctor out;
    out.functor.poset = f.poset;
    for (std::size_t i = 0; i < inclusions.size(); ++i) {
        if (inclusions[i].cols() != f.dims[i])
            throw std::invalid_argument("sub-functor: basis width mismatch");
        out.functor.dims.push_back(inclusions[i].rows());
    }
    for (auto& [lo, hi] : poset_covers(f.poset)) {
        auto images = inclusions[lo] * f.cover_maps.at({lo, hi}).transposed();
        auto c = express_in_rows(inclusions[hi], images);
        if (!c) throw std::logic_error("sub-functor: transition leaves the subspace");
        out.functor.cover_maps.emplace(std::pair{lo, hi}, c->transposed());
    }
    out.inclusions = std::move(inclusions);
    return out;
}

SubFunctor filt1(const PosetFunctor& f, int p) {
    std::vector<GF2Matrix> incl;
    for (std::size_t i = 0; i < f.dims.size(); ++i)
        incl.push_back(f.poset.elements[i].dim() >= p ? GF2Matrix::identity(f.dims[i])
                                                      : GF2Matrix(0, f.dims[i]));
    return make_sub_functor(f, std::move(incl));
}

SubFunctor filt2(const PosetFunctor& f, int p) {
    if (f.poset.kind != PosetKind::all)
        throw std::invalid_argument("filt2 needs the full subspace poset");
    std::vector<GF2Matrix> incl;
    for (std::size_t i = 0; i < f.dims.size(); ++i) {
        GF2Matrix stacked(0, f.dims[i]);
        for (auto& w : f.poset.elements) {
            if (w.codim() >= p) continue;
            auto target = sum(f.poset.elements[i], w);
            stacked = GF2Matrix::vstack(stacked, f.transition(i, f.poset.index_of(target)));
        }
        incl.push_back(kernel_basis(stacked));
    }
    return make_sub_functor(f, std::move(incl));
}

std::string functor_to_json(const PosetFunctor& f) {
    nlohmann::json j;
    switch (f.poset.kind) {
        case PosetKind::all:
            j["poset"] = "W";
            break;
        case PosetKind::nonzero:
            j["poset"] = "W0";
            break;
        case PosetKind::band: {
            int d = f.poset.n, c = f.poset.n;
            for (auto& e : f.poset.elements) {
                d = std::min(d, e.dim());
                c = std::min(c, e.codim());
            }
            j["poset"] = "B(" + std::to_string(d) + "," + std::to_string(c) + ")";
            break;
        }
        default:
            throw std::invalid_argument("only W, W0 and band posets serialize");
    }
    j["n"] = f.poset.n;
    nlohmann::json dims = nlohmann::json::object();
    for (std::size_t i = 0; i < f.dims.size(); ++i)
        dims[subspace_key(f.poset.elements[i])] = f.dims[i];
    j["dims"] = dims;
    nlohmann::json maps = nlohmann::json::object();
    for (auto& [key, m] : f.cover_maps) {
        if (m.rows() == 0 || m.cols() == 0) continue;
        std::vector<std::vector<int>> rows(m.rows(), std::vector<int>(m.cols(), 0));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.get(r, c);
        maps[subspace_key(f.poset.elements[key.first]) + "<" +
             subspace_key(f.poset.elements[key.second])] = rows;
    }
    j["maps"] = maps;
    return j.dump();
}

namespace {

Subspace parse_key(int n, const std::string& key) {
    if (key == "0") return zero_subspace(n);
    std::vector<Mask> rows;
    std::size_t at = 0;
    while (at < key.size()) {
        std::size_t end = key.find(',', at);
        if (end == std::string::npos) end = key.size();
        rows.push_back(static_cast<Mask>(std::stoul(key.substr(at, end - at))));
        at = end + 1;
    }
    auto canon = canonical_subspace(n, rows);
    if (canon.rows != rows) throw std::invalid_argument("subspace key is not canonical");
    return canon;
}

}  // namespace

PosetFunctor functor_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::string pk = j.at("poset").get<std::string>();
    PosetView poset;
    if (pk == "W")
        poset = poset_all(n);
    else if (pk == "W0")
        poset = poset_nonzero(n);
    else if (pk.rfind("B(", 0) == 0 && pk.back() == ')') {
        auto comma = pk.find(',');
        int d = std::stoi(pk.substr(2, comma - 2));
        int c = std::stoi(pk.substr(comma + 1, pk.size() - comma - 2));
        poset = poset_band(n, d, c);
    } else
        throw std::invalid_argument("unknown poset name: " + pk);

    PosetFunctor f{poset, std::vector<std::size_t>(poset.elements.size(), 0), {}};
    for (auto& [key, val] : j.at("dims").items())
        f.dims[poset.index_of(parse_key(n, key))] = val.get<std::size_t>();

    auto covers = poset_covers(poset);
    for (auto& [lo, hi] : covers)
        f.cover_maps.emplace(std::pair{lo, hi}, GF2Matrix(f.dims[hi], f.dims[lo]));
    for (auto& [key, val] : j.at("maps").items()) {
        auto lt = key.find('<');
        if (lt == std::string::npos) throw std::invalid_argument("bad map key: " + key);
        std::size_t lo = poset.index_of(parse_key(n, key.substr(0, lt)));
        std::size_t hi = poset.index_of(parse_key(n, key.substr(lt + 1)));
        auto it = f.cover_maps.find({lo, hi});
        if (it == f.cover_maps.end())
            throw std::invalid_argument("map key is not a covering pair: " + key);
        auto rows = val.get<std::vector<std::vector<int>>>();
        GF2Matrix m(f.dims[hi], f.dims[lo]);
        if (rows.size() != m.rows()) throw std::invalid_argument("map rows mismatch: " + key);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (rows[r].size() != m.cols())
                throw std::invalid_argument("map cols mismatch: " + key);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (rows[r][c]) m.set(r, c, true);
        }
        it->second = m;
    }
    // a nonzero-shaped map may not be left implicit
    for (auto& [key, m] : f.cover_maps)
        if (m.rows() && m.cols()) {
            std::string name = subspace_key(poset.elements[key.first]) + "<" +
                               subspace_key(poset.elements[key.second]);
            if (!j.at("maps").contains(name))
                throw std::invalid_argument("missing map: " + name);
        }
    f.validate();
    return f;
}

}  // namespace stlab
