// steinberg.cpp

#include "steinberg_lab/steinberg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace stlab {

namespace {

// chains with s vertices; s = 0 is the augmentation slot
std::vector<Simplex> chain_slot(const PosetView& interval, int s) {
    if (s == 0) return {Simplex{}};
    return chains(interval, s - 1);
}

std::size_t slot_index(const std::vector<Simplex>& slot, const Simplex& s) {
    auto it = std::lower_bound(slot.begin(), slot.end(), s);
    if (it == slot.end() || *it != s) throw std::logic_error("chain not in slot");
    return it - slot.begin();
}

GF2Matrix boundary_between(const std::vector<Simplex>& lower,
                           const std::vector<Simplex>& upper) {
    GF2Matrix d(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c)
        for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
            Simplex face = upper[c];
            face.erase(face.begin() + drop);
            d.flip(slot_index(lower, face), c);
        }
    return d;
}

SteinbergModule build_interval(const Subspace& bot, const Subspace& top) {
    SteinbergModule st;
    st.bot = bot;
    st.top = top;
    st.interval = poset_open_interval(bot, top);
    int m = st.layer_dim();
    int s = std::max(m - 1, 0);
    st.top_chains = chain_slot(st.interval, s);
    st.below_chains = s == 0 ? std::vector<Simplex>{} : chain_slot(st.interval, s - 1);
    st.boundary = s == 0 ? GF2Matrix(0, st.top_chains.size())
                         : boundary_between(st.below_chains, st.top_chains);
    // no chains above the top slot, so homology there is plain kernel
    auto h = homology_chart(st.boundary, GF2Matrix(st.top_chains.size(), 0));
    st.dim = h.dim;
    st.cycles = std::move(h.reps);
    st.coords = std::move(h.coords);
    return st;
}

std::map<std::tuple<int, std::vector<Mask>, std::vector<Mask>>, StHandle>& cache() {
    static std::map<std::tuple<int, std::vector<Mask>, std::vector<Mask>>, StHandle> c;
    return c;
}
std::mutex cache_mutex;

}  // namespace

StHandle steinberg_interval(const Subspace& bot, const Subspace& top, bool unsafe) {
    if (bot.n != top.n || !contains(top, bot))
        throw std::invalid_argument("steinberg_interval: need bot <= top");
    int m = top.dim() - bot.dim();
    if (m > (unsafe ? 5 : 4)) throw std::invalid_argument("steinberg_interval: layer too large");
    auto key = std::make_tuple(bot.n, bot.rows, top.rows);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
    auto handle = std::make_shared<const SteinbergModule>(build_interval(bot, top));
    cache().emplace(std::move(key), handle);
    return handle;
}

StHandle steinberg(int n, bool unsafe) {
    return steinberg_interval(zero_subspace(n), full_subspace(n), unsafe);
}

std::vector<std::size_t> reduced_homology_dims(const Subspace& bot, const Subspace& top) {
    auto interval = poset_open_interval(bot, top);
    int m = top.dim() - bot.dim();
    if (m == 0) return {};
    std::vector<std::vector<Simplex>> slots;
    for (int s = 0; s < m; ++s) slots.push_back(chain_slot(interval, s));
    CochainComplex cx;  // descending boundaries laid out as an ascending complex
    for (int k = 0; k < m; ++k) cx.dims.push_back(slots[m - 1 - k].size());
    for (int k = 0; k + 1 < m; ++k)
        cx.d.push_back(boundary_between(slots[m - 2 - k], slots[m - 1 - k]));
    auto h = cx.homology_dims();
    std::vector<std::size_t> out(m);
    for (int k = 0; k < m; ++k) out[m - 1 - k] = h[k];
    return out;
}

namespace {

// image chains under keep-and-strip, expressed in the target module basis;
// build(sigma) returns the stripped target chain or nothing to drop sigma
template <typename Keep>
GF2Matrix descend(const SteinbergModule& src, const SteinbergModule& dst, Keep&& keep) {
    GF2Matrix chain_map(dst.chain_dim(), src.chain_dim());
    for (std::size_t c = 0; c < src.top_chains.size(); ++c) {
        auto image = keep(src.top_chains[c]);
        if (!image) continue;
        chain_map.flip(slot_index(dst.top_chains, *image), c);
    }
    // stripped cycles must be cycles downstairs
    if (!(dst.boundary * (chain_map * src.cycles.transposed())).is_zero())
        throw std::logic_error("keep-and-strip broke a cycle");
    return dst.coords * (chain_map * src.cycles.transposed());
}

}  // namespace

GF2Matrix interval_r_map(const SteinbergModule& src, const Subspace& h) {
    if (src.layer_dim() < 1) throw std::invalid_argument("r: source layer is trivial");
    if (h.dim() + 1 != src.top.dim() || !contains(src.top, h) || !contains(h, src.bot))
        throw std::invalid_argument("r: target must sit one step below the top");
    auto dst = steinberg_interval(src.bot, h);
    if (src.layer_dim() == 1) return GF2Matrix::identity(1);
    std::size_t h_idx = src.interval.index_of(h);
    return descend(src, *dst, [&](const Simplex& sigma) -> std::optional<Simplex> {
        if (sigma.back() != h_idx) return std::nullopt;
        Simplex stripped;
        for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
            stripped.push_back(dst->interval.index_of(src.interval.elements[sigma[i]]));
        return stripped;
    });
}

GF2Matrix interval_s_map(const SteinbergModule& src, const Subspace& d) {
    if (src.layer_dim() < 1) throw std::invalid_argument("s: source layer is trivial");
    if (d.dim() != src.bot.dim() + 1 || !contains(src.top, d) || !contains(d, src.bot))
        throw std::invalid_argument("s: quotient line must sit one step above the bottom");
    auto dst = steinberg_interval(d, src.top);
    if (src.layer_dim() == 1) return GF2Matrix::identity(1);
    std::size_t d_idx = src.interval.index_of(d);
    return descend(src, *dst, [&](const Simplex& sigma) -> std::optional<Simplex> {
        if (sigma.front() != d_idx) return std::nullopt;
        Simplex stripped;
        for (std::size_t i = 1; i < sigma.size(); ++i)
            stripped.push_back(dst->interval.index_of(src.interval.elements[sigma[i]]));
        return stripped;
    });
}

GF2Matrix r_map(int n, const Subspace& h) {
    if (h.codim() != 1) throw std::invalid_argument("r_map: codimension one target required");
    return interval_r_map(*steinberg(n), h);
}

GF2Matrix s_map(int n, const Subspace& d) {
    if (d.dim() != 1) throw std::invalid_argument("s_map: need a line");
    auto src = steinberg(n);
    auto dst = steinberg(n - 1);
    if (n == 1) return GF2Matrix::identity(1);
    auto chart = quotient_chart(n, d);
    std::size_t d_idx = src->interval.index_of(d);
    return descend(*src, *dst, [&](const Simplex& sigma) -> std::optional<Simplex> {
        if (sigma.front() != d_idx) return std::nullopt;
        Simplex stripped;
        for (std::size_t i = 1; i < sigma.size(); ++i) {
            auto& u = src->interval.elements[sigma[i]];
            std::vector<Mask> image_rows;
            for (Mask row : u.rows) image_rows.push_back(apply_mask(chart.proj, row));
            stripped.push_back(
                dst->interval.index_of(canonical_subspace(n - 1, image_rows)));
        }
        std::sort(stripped.begin(), stripped.end());
        return stripped;
    });
}

GF2Matrix gl_transport(const GLElement& g, const SteinbergModule& src,
                       const SteinbergModule& dst) {
    if (!(act(g, dst.bot) == src.bot) || !(act(g, dst.top) == src.top))
        throw std::invalid_argument("transport: g must carry the target interval to the source");
    GF2Matrix lam(dst.chain_dim(), src.chain_dim());
    for (std::size_t t = 0; t < dst.top_chains.size(); ++t) {
        Simplex image;
        for (auto v : dst.top_chains[t])
            image.push_back(src.interval.index_of(act(g, dst.interval.elements[v])));
        std::sort(image.begin(), image.end());
        lam.flip(t, slot_index(src.top_chains, image));
    }
    return dst.coords * (lam * src.cycles.transposed());
}

GF2Matrix gl_on_steinberg(const GLElement& g, const SteinbergModule& st) {
    return gl_transport(g, st, st);
}

CochainComplex LusztigComplex::as_cochain() const {
    CochainComplex cx;
    for (int k = 0; k <= n; ++k) cx.dims.push_back(dims[n - k]);
    for (int k = 0; k + 1 <= n; ++k) cx.d.push_back(boundary[n - 1 - k]);
    return cx;
}

std::vector<std::size_t> LusztigComplex::homology_dims() const {
    auto h = as_cochain().homology_dims();
    std::vector<std::size_t> out(n + 1);
    for (int k = 0; k <= n; ++k) out[n - k] = h[k];
    return out;
}

bool LusztigComplex::is_acyclic() const { return as_cochain().is_exact(); }

LusztigComplex lusztig_complex(int n, int variant) {
    if (n < 1) throw std::invalid_argument("lusztig_complex: n >= 1 required");
    if (variant != 1 && variant != 2) throw std::invalid_argument("variant must be 1 or 2");
    LusztigComplex lu;
    lu.n = n;
    lu.variant = variant;
    auto module_of = [&](const Subspace& w) {
        return variant == 1 ? steinberg_interval(zero_subspace(n), w)
                            : steinberg_interval(w, full_subspace(n));
    };
    for (int p = 0; p <= n; ++p) {
        lu.summands.push_back(enumerate_subspaces(n, variant == 1 ? p : n - p));
        std::vector<std::size_t> offs;
        std::size_t total = 0;
        for (auto& w : lu.summands[p]) {
            offs.push_back(total);
            total += module_of(w)->dim;
        }
        lu.offsets.push_back(std::move(offs));
        lu.dims.push_back(total);
    }
    for (int p = 1; p <= n; ++p) {
        GF2Matrix d(lu.dims[p - 1], lu.dims[p]);
        for (std::size_t si = 0; si < lu.summands[p].size(); ++si) {
            auto& w = lu.summands[p][si];
            auto src = module_of(w);
            for (std::size_t ti = 0; ti < lu.summands[p - 1].size(); ++ti) {
                auto& w2 = lu.summands[p - 1][ti];
                GF2Matrix block;
                if (variant == 1) {
                    if (!(w2.dim() + 1 == w.dim() && contains(w, w2))) continue;
                    block = interval_r_map(*src, w2);
                } else {
                    if (!(w.dim() + 1 == w2.dim() && contains(w2, w))) continue;
                    block = interval_s_map(*src, w2);
                }
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c)
                        if (block.get(r, c))
                            d.set(lu.offsets[p - 1][ti] + r, lu.offsets[p][si] + c, true);
            }
        }
        lu.boundary.push_back(std::move(d));
    }
    lu.as_cochain().validate();  // composition-zero is part of the contract
    return lu;
}

}  // namespace stlab
