#include "dsset/sset.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace dsset {

using nlohmann::json;

std::string to_string(const SimplexKey& k) {
    std::ostringstream os;
    os << "(" << k.dim << "," << k.cell;
    if (!k.word.empty()) {
        os << "|";
        for (int w : k.word) os << "s" << w;
    }
    os << ")";
    return os.str();
}

void PresentedSSet::resize_dims(int d) {
    max_dim = d;
    cells.resize(d + 1);
    faces.resize(d + 1);
}

int PresentedSSet::cell_count(int d) const {
    if (d < 0 || d > max_dim) return 0;
    return static_cast<int>(cells[d].size());
}

int PresentedSSet::total_cells() const {
    int t = 0;
    for (int d = 0; d <= max_dim; ++d) t += cell_count(d);
    return t;
}

int PresentedSSet::add_cell(int dim, const std::string& name, std::vector<SimplexKey> fs) {
    if (dim > max_dim) resize_dims(dim);
    cells[dim].push_back(name);
    faces[dim].push_back(std::move(fs));
    name_index_.clear();
    return static_cast<int>(cells[dim].size()) - 1;
}

void PresentedSSet::rebuild_index() const {
    name_index_.clear();
    for (int d = 0; d <= max_dim; ++d)
        for (int i = 0; i < cell_count(d); ++i) name_index_[cells[d][i]] = {d, i};
}

int PresentedSSet::cell_index(int dim, const std::string& name) const {
    if (name_index_.empty()) rebuild_index();
    auto it = name_index_.find(name);
    if (it == name_index_.end() || it->second.first != dim) return -1;
    return it->second.second;
}

SimplexKey PresentedSSet::degeneracy(const SimplexKey& k, int j) const {
    // s_j s_i = s_{i+1} s_j for j <= i ; keep the word strictly decreasing
    std::vector<int> w;
    size_t p = 0;
    int jj = j;
    while (p < k.word.size() && jj <= k.word[p]) {
        w.push_back(k.word[p] + 1);
        ++p;
    }
    w.push_back(jj);
    for (; p < k.word.size(); ++p) w.push_back(k.word[p]);
    return SimplexKey{k.dim + 1, k.cell, std::move(w)};
}

SimplexKey PresentedSSet::face(const SimplexKey& k, int i) const {
    // d_i s_w = s_{w-1} d_i (i<w) ; id (i=w,w+1) ; s_w d_{i-1} (i>w+1)
    std::vector<int> out;
    int fi = i;
    for (size_t p = 0; p < k.word.size(); ++p) {
        int w = k.word[p];
        if (fi < w) {
            out.push_back(w - 1);
        } else if (fi == w || fi == w + 1) {
            for (size_t q = p + 1; q < k.word.size(); ++q) out.push_back(k.word[q]);
            return SimplexKey{k.dim - 1, k.cell, std::move(out)};
        } else {
            out.push_back(w);
            --fi;
        }
    }
    int bd = k.base_dim();
    SimplexKey res = faces[bd][k.cell][fi];
    for (auto it = out.rbegin(); it != out.rend(); ++it) res = degeneracy(res, *it);
    return res;
}

SimplexKey PresentedSSet::apply_word(const SimplexKey& k, const std::vector<int>& word) const {
    SimplexKey res = k;
    for (auto it = word.rbegin(); it != word.rend(); ++it) res = degeneracy(res, *it);
    return res;
}

std::vector<SimplexKey> PresentedSSet::all_simplices(int d) const {
    std::vector<SimplexKey> out;
    for (int bd = 0; bd <= d && bd <= max_dim; ++bd) {
        int len = d - bd;
        for (int c = 0; c < cell_count(bd); ++c) {
            // strictly decreasing words w1 > ... > w_len with w_m <= bd + (len - m)
            std::vector<int> w;
            std::function<void(int)> rec = [&](int m) {
                if (m == len) {
                    out.push_back(SimplexKey{d, c, w});
                    return;
                }
                int cap = bd + (len - m) - 1;              // dim before this letter
                int upper = w.empty() ? cap : std::min(cap, w.back() - 1);
                for (int j = upper; j >= 0; --j) {
                    w.push_back(j);
                    rec(m + 1);
                    w.pop_back();
                }
            };
            rec(0);
        }
    }
    return out;
}

std::vector<SimplexKey> PresentedSSet::vertices(const SimplexKey& k) const {
    // deleting positions from the top down keeps the lower indices valid
    std::vector<SimplexKey> vs;
    for (int v = 0; v <= k.dim; ++v) {
        SimplexKey cur = k;
        for (int i = k.dim; i >= 0; --i) {
            if (i == v) continue;
            cur = face(cur, i);
        }
        vs.push_back(cur);
    }
    return vs;
}

std::string PresentedSSet::key_string(const SimplexKey& k) const {
    std::string s = cells[k.base_dim()][k.cell];
    if (!k.word.empty()) {
        s += "|";
        for (int w : k.word) s += "s" + std::to_string(w);
    }
    return s;
}

SimplexKey PresentedSSet::parse_key(const std::string& s) const {
    auto bar = s.rfind('|');
    std::string name = s;
    std::vector<int> word;
    if (bar != std::string::npos && bar + 1 < s.size() && s[bar + 1] == 's') {
        name = s.substr(0, bar);
        std::string rest = s.substr(bar + 1);
        size_t p = 0;
        while (p < rest.size()) {
            if (rest[p] != 's') throw std::runtime_error("bad key: " + s);
            size_t q = p + 1;
            while (q < rest.size() && isdigit(rest[q])) ++q;
            word.push_back(std::stoi(rest.substr(p + 1, q - p - 1)));
            p = q;
        }
    }
    for (int d = 0; d <= max_dim; ++d) {
        int idx = cell_index(d, name);
        if (idx >= 0) return SimplexKey{d + static_cast<int>(word.size()), idx, word};
    }
    throw std::runtime_error("unknown cell in key: " + s);
}

void PresentedSSet::validate() const {
    for (int n = 0; n <= max_dim; ++n) {
        for (int c = 0; c < cell_count(n); ++c) {
            if (static_cast<int>(faces[n][c].size()) != (n == 0 ? 0 : n + 1))
                throw std::runtime_error("cell " + cells[n][c] + ": wrong face count");
            for (int i = 0; i <= n && n > 0; ++i) {
                const SimplexKey& f = faces[n][c][i];
                if (f.dim != n - 1) throw std::runtime_error("cell " + cells[n][c] + ": face dim");
                if (f.base_dim() < 0 || f.base_dim() > max_dim ||
                    f.cell >= cell_count(f.base_dim()))
                    throw std::runtime_error("cell " + cells[n][c] + ": dangling face");
                for (size_t w = 0; w + 1 < f.word.size(); ++w)
                    if (f.word[w] <= f.word[w + 1])
                        throw std::runtime_error("cell " + cells[n][c] + ": word not decreasing");
            }
            SimplexKey self{n, c, {}};
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < j; ++i) {
                    SimplexKey a = face(face(self, j), i);
                    SimplexKey b = face(face(self, i), j - 1);
                    if (a != b)
                        throw std::runtime_error("simplicial identity fails at cell " +
                                                 cells[n][c] + " (i=" + std::to_string(i) +
                                                 ",j=" + std::to_string(j) + ")");
                }
        }
    }
    if (coskeletal_above) {
        // above the bound, simplices must biject with compatible boundary tuples
        for (int n = *coskeletal_above + 1; n <= max_dim; ++n) {
            auto tuples = boundary_tuples(*this, n);
            std::set<std::vector<SimplexKey>> all(tuples.begin(), tuples.end());
            std::set<std::vector<SimplexKey>> have;
            for (int c = 0; c < cell_count(n); ++c)
                if (!have.insert(faces[n][c]).second)
                    throw std::runtime_error("coskeletal: duplicate boundary tuple");
            for (auto& t : have)
                if (!all.count(t))
                    throw std::runtime_error("coskeletal: stored cell tuple not compatible");
            std::set<std::vector<SimplexKey>> degen;
            for (const auto& y : all_simplices(n - 1))
                for (int j = 0; j <= n - 1; ++j) {
                    SimplexKey s = degeneracy(y, j);
                    std::vector<SimplexKey> t;
                    for (int i = 0; i <= n; ++i) t.push_back(face(s, i));
                    degen.insert(std::move(t));
                }
            for (auto& t : have)
                if (degen.count(t))
                    throw std::runtime_error("coskeletal: nondegenerate cell with degenerate tuple");
            for (auto& t : all)
                if (!degen.count(t) && !have.count(t))
                    throw std::runtime_error("coskeletal: missing cell for boundary tuple");
        }
    }
}

// ---- maps -------------------------------------------------------------------

SimplexKey SSetMap::apply(const SimplexKey& k) const {
    SimplexKey base = image[k.base_dim()][k.cell];
    return dst->apply_word(base, k.word);
}

bool SSetMap::valid(std::string* why) const {
    for (int n = 0; n <= src->max_dim; ++n)
        for (int c = 0; c < src->cell_count(n); ++c) {
            if (image[n][c].dim != n) {
                if (why) *why = "image dim mismatch at " + src->cells[n][c];
                return false;
            }
            SimplexKey self{n, c, {}};
            for (int i = 0; i <= n && n > 0; ++i) {
                SimplexKey a = apply(src->face(self, i));
                SimplexKey b = dst->face(apply(self), i);
                if (a != b) {
                    if (why)
                        *why = "face " + std::to_string(i) + " of " + src->cells[n][c] +
                               " not preserved";
                    return false;
                }
            }
        }
    return true;
}

SSetMap identity_map(const PresentedSSet& x) {
    SSetMap m;
    m.src = &x;
    m.dst = &x;
    m.image.resize(x.max_dim + 1);
    for (int d = 0; d <= x.max_dim; ++d)
        for (int c = 0; c < x.cell_count(d); ++c) m.image[d].push_back(SimplexKey{d, c, {}});
    return m;
}

SSetMap compose(const SSetMap& f, const SSetMap& g) {
    SSetMap m;
    m.src = f.src;
    m.dst = g.dst;
    m.image.resize(f.src->max_dim + 1);
    for (int d = 0; d <= f.src->max_dim; ++d)
        for (int c = 0; c < f.src->cell_count(d); ++c)
            m.image[d].push_back(g.apply(f.image[d][c]));
    return m;
}

SSetMap as_map(const PresentedSSet& src, const PresentedSSet& dst, const MapTable& t) {
    SSetMap m;
    m.src = &src;
    m.dst = &dst;
    m.image = t;
    return m;
}

// ---- simplices, horns, posets ------------------------------------------------

std::string subset_name(const std::vector<int>& verts) {
    std::string s;
    for (int v : verts) s += std::to_string(v);
    return s;
}

std::vector<int> parse_subset_name(const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(c - '0');
    return out;
}

static void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) return;
    while (true) {
        out.push_back(idx);
        int p = k - 1;
        while (p >= 0 && idx[p] == n - (k - 1 - p)) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
}

PresentedSSet standard_simplex(int n) {
    if (n < 0) throw std::invalid_argument("standard_simplex: n < 0");
    PresentedSSet x(n);
    std::map<std::vector<int>, int> index;
    for (int d = 0; d <= n; ++d) {
        std::vector<std::vector<int>> subs;
        subsets_of_size(n, d + 1, subs);
        for (auto& s : subs) {
            std::vector<SimplexKey> fs;
            if (d > 0)
                for (int i = 0; i <= d; ++i) {
                    std::vector<int> f = s;
                    f.erase(f.begin() + i);
                    fs.push_back(SimplexKey{d - 1, index.at(f), {}});
                }
            index[s] = x.add_cell(d, subset_name(s), std::move(fs));
        }
    }
    return x;
}

PresentedSSet horn(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw std::invalid_argument("horn: bad (n,i)");
    PresentedSSet x(n - 1);
    // faces of Delta^n missing some j != i, and all their subfaces
    std::set<std::vector<int>> keep;
    for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        std::vector<int> f;
        for (int v = 0; v <= n; ++v)
            if (v != j) f.push_back(v);
        // all nonempty subsets of f
        int m = static_cast<int>(f.size());
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> s;
            for (int b = 0; b < m; ++b)
                if (mask & (1 << b)) s.push_back(f[b]);
            keep.insert(s);
        }
    }
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> sorted(keep.begin(), keep.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    for (auto& s : sorted) {
        int d = static_cast<int>(s.size()) - 1;
        std::vector<SimplexKey> fs;
        if (d > 0)
            for (int k = 0; k <= d; ++k) {
                std::vector<int> f = s;
                f.erase(f.begin() + k);
                fs.push_back(SimplexKey{d - 1, index.at(f), {}});
            }
        index[s] = x.add_cell(d, subset_name(s), std::move(fs));
    }
    return x;
}

SSetMap horn_inclusion(const PresentedSSet& h, const PresentedSSet& simp, int /*n*/, int /*i*/) {
    SSetMap m;
    m.src = &h;
    m.dst = &simp;
    m.image.resize(h.max_dim + 1);
    for (int d = 0; d <= h.max_dim; ++d)
        for (int c = 0; c < h.cell_count(d); ++c) {
            int idx = simp.cell_index(d, h.cells[d][c]);
            if (idx < 0) throw std::runtime_error("horn_inclusion: missing cell");
            m.image[d].push_back(SimplexKey{d, idx, {}});
        }
    return m;
}

void Poset::validate() const {
    int n = size();
    for (int a = 0; a < n; ++a) {
        if (!leq[a][a]) throw std::runtime_error("poset not reflexive");
        for (int b = 0; b < n; ++b) {
            if (a != b && leq[a][b] && leq[b][a]) throw std::runtime_error("poset not antisymmetric");
            for (int c = 0; c < n; ++c)
                if (leq[a][b] && leq[b][c] && !leq[a][c])
                    throw std::runtime_error("poset not transitive");
        }
    }
}

std::vector<std::pair<int, int>> Poset::hasse_edges() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < n && cover; ++c)
                if (c != a && c != b && less(a, c) && less(c, b)) cover = false;
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

PresentedSSet nerve_of_poset(const Poset& p, int D) {
    PresentedSSet x(D);
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> prev;
    for (int d = 0; d <= D; ++d) {
        std::vector<std::vector<int>> chains;
        if (d == 0) {
            for (int a = 0; a < p.size(); ++a) chains.push_back({a});
        } else {
            for (auto& c : prev)
                for (int b = 0; b < p.size(); ++b)
                    if (p.less(c.back(), b)) {
                        auto c2 = c;
                        c2.push_back(b);
                        chains.push_back(std::move(c2));
                    }
        }
        std::stable_sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
            std::vector<std::string> an, bn;
            for (int v : a) an.push_back(p.elems[v]);
            for (int v : b) bn.push_back(p.elems[v]);
            return an < bn;
        });
        for (auto& c : chains) {
            std::string name;
            for (size_t q = 0; q < c.size(); ++q) name += (q ? "<" : "") + p.elems[c[q]];
            std::vector<SimplexKey> fs;
            if (d > 0)
                for (int i = 0; i <= d; ++i) {
                    auto f = c;
                    f.erase(f.begin() + i);
                    fs.push_back(SimplexKey{d - 1, index.at(f), {}});
                }
            index[c] = x.add_cell(d, name, std::move(fs));
        }
        prev = std::move(chains);
    }
    return x;
}

// ---- products ----------------------------------------------------------------

namespace {

struct RawPair {
    SimplexKey a, b; // same dim
    auto operator<=>(const RawPair&) const = default;
};

// is k in the image of s_j ?
bool degenerate_at(const PresentedSSet& x, const SimplexKey& k, int j) {
    if (k.word.empty()) return false;
    SimplexKey r = x.degeneracy(x.face(k, j), j);
    return r == k;
}

// strip common degeneracies: returns (nondeg pair, word) with pair = s_word(nondeg)
std::pair<RawPair, std::vector<int>> pair_normal_form(const PresentedSSet& A,
                                                      const PresentedSSet& B, RawPair p) {
    // letters collected in strip order (outermost first); reversed so that callers
    // can re-apply them innermost-first through degeneracy(), which normalizes
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int j = p.a.dim - 1; j >= 0; --j) {
            if (degenerate_at(A, p.a, j) && degenerate_at(B, p.b, j)) {
                p.a = A.face(p.a, j);
                p.b = B.face(p.b, j);
                word.push_back(j);
                changed = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return {p, word};
}

} // namespace

ProductResult product_presented(const PresentedSSet& A, const PresentedSSet& B, int D) {
    ProductResult R;
    PresentedSSet& P = R.prod;
    P.resize_dims(D);
    std::map<RawPair, SimplexKey> cellof; // nondegenerate raw pairs -> key
    auto resolve = [&](RawPair raw) -> SimplexKey {
        auto [nf, word] = pair_normal_form(A, B, raw);
        SimplexKey base = cellof.at(nf);
        // apply collected degeneracies outermost-last
        SimplexKey res = base;
        for (int j : word) res = P.degeneracy(res, j);
        return res;
    };
    for (int d = 0; d <= D; ++d) {
        std::vector<std::pair<std::string, RawPair>> named;
        for (const auto& ka : A.all_simplices(d))
            for (const auto& kb : B.all_simplices(d)) {
                RawPair rp{ka, kb};
                auto [nf, word] = pair_normal_form(A, B, rp);
                if (!word.empty()) continue; // degenerate as a pair
                std::string nm = "(" + A.key_string(ka) + "," + B.key_string(kb) + ")";
                named.emplace_back(std::move(nm), rp);
            }
        std::stable_sort(named.begin(), named.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [nm, rp] : named) {
            std::vector<SimplexKey> fs;
            if (d > 0)
                for (int i = 0; i <= d; ++i)
                    fs.push_back(resolve(RawPair{A.face(rp.a, i), B.face(rp.b, i)}));
            int idx = P.add_cell(d, nm, std::move(fs));
            cellof[rp] = SimplexKey{d, idx, {}};
        }
    }
    // projections
    R.to_left.resize(D + 1);
    R.to_right.resize(D + 1);
    std::map<SimplexKey, RawPair> back;
    for (auto& [rp, k] : cellof) back[k] = rp;
    for (int d = 0; d <= D; ++d)
        for (int c = 0; c < P.cell_count(d); ++c) {
            RawPair rp = back.at(SimplexKey{d, c, {}});
            R.to_left[d].push_back(rp.a);
            R.to_right[d].push_back(rp.b);
        }
    return R;
}

// ---- quotients ----------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int a) {
        while (up[a] != a) a = up[a] = up[up[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        up[b] = a; // keep the smaller index as representative
        return true;
    }
};

} // namespace

QuotientResult quotient_presented(const PresentedSSet& X,
                                  const std::vector<std::pair<SimplexKey, SimplexKey>>& gens) {
    int D = X.max_dim;
    // enumerate all simplices per dim, index them
    std::vector<std::vector<SimplexKey>> alls(D + 1);
    std::vector<std::map<SimplexKey, int>> index(D + 1);
    for (int d = 0; d <= D; ++d) {
        alls[d] = X.all_simplices(d);
        std::sort(alls[d].begin(), alls[d].end());
        for (size_t i = 0; i < alls[d].size(); ++i) index[d][alls[d][i]] = static_cast<int>(i);
    }
    std::vector<UnionFind> uf;
    for (int d = 0; d <= D; ++d) uf.emplace_back(alls[d].size());

    std::vector<std::pair<int, std::pair<int, int>>> work; // (dim, (a,b))
    auto push_pair = [&](int d, const SimplexKey& a, const SimplexKey& b) {
        if (a == b) return;
        int ia = index[d].at(a), ib = index[d].at(b);
        if (uf[d].unite(ia, ib)) work.push_back({d, {ia, ib}});
    };
    for (auto& [a, b] : gens) {
        if (a.dim != b.dim) throw std::invalid_argument("quotient: generator dims differ");
        push_pair(a.dim, a, b);
    }
    while (!work.empty()) {
        auto [d, pr] = work.back();
        work.pop_back();
        const SimplexKey &a = alls[d][pr.first], &b = alls[d][pr.second];
        for (int i = 0; i <= d && d > 0; ++i) push_pair(d - 1, X.face(a, i), X.face(b, i));
        if (d < D)
            for (int j = 0; j <= d; ++j)
                push_pair(d + 1, X.degeneracy(a, j), X.degeneracy(b, j));
    }

    // classes: representative name = lexicographically least member name
    std::vector<std::vector<std::vector<int>>> classes(D + 1); // [d][class] -> member ids
    std::vector<std::vector<int>> class_of(D + 1);
    for (int d = 0; d <= D; ++d) {
        std::map<int, int> root_to_class;
        class_of[d].assign(alls[d].size(), -1);
        for (size_t i = 0; i < alls[d].size(); ++i) {
            int r = uf[d].find(static_cast<int>(i));
            auto it = root_to_class.find(r);
            int cid;
            if (it == root_to_class.end()) {
                cid = static_cast<int>(classes[d].size());
                root_to_class[r] = cid;
                classes[d].push_back({});
            } else
                cid = it->second;
            classes[d][cid].push_back(static_cast<int>(i));
            class_of[d][static_cast<int>(i)] = cid;
        }
    }
    auto class_name = [&](int d, int cid) {
        std::string best;
        for (int m : classes[d][cid]) {
            std::string nm = X.key_string(alls[d][m]);
            if (best.empty() || nm < best) best = nm;
        }
        return best;
    };
    auto class_degenerate = [&](int d, int cid) {
        for (int m : classes[d][cid])
            if (alls[d][m].degenerate()) return true;
        return false;
    };

    QuotientResult R;
    PresentedSSet& Q = R.quot;
    Q.resize_dims(D);
    // nondegenerate classes become cells, ordered by name
    std::vector<std::vector<int>> cell_class(D + 1);      // [d][cell] -> class id
    std::vector<std::vector<int>> class_cell(D + 1);      // [d][class] -> cell or -1
    for (int d = 0; d <= D; ++d) {
        std::vector<std::pair<std::string, int>> named;
        for (size_t cid = 0; cid < classes[d].size(); ++cid)
            if (!class_degenerate(d, static_cast<int>(cid)))
                named.emplace_back(class_name(d, static_cast<int>(cid)), static_cast<int>(cid));
        std::stable_sort(named.begin(), named.end());
        class_cell[d].assign(classes[d].size(), -1);
        for (auto& [nm, cid] : named) {
            int idx = Q.add_cell(d, nm);
            cell_class[d].push_back(cid);
            class_cell[d][cid] = idx;
        }
    }
    // normal form of a class: walk degenerate members down
    std::function<SimplexKey(int, int)> normal_of_class = [&](int d, int cid) -> SimplexKey {
        if (class_cell[d][cid] >= 0) return SimplexKey{d, class_cell[d][cid], {}};
        // find a member expressible as s_j(y); strip and recurse
        for (int m : classes[d][cid]) {
            const SimplexKey& k = alls[d][m];
            if (!k.degenerate()) continue;
            int j = k.word.back(); // innermost degeneracy: k = s_j(face_j k) need not hold; test all
            for (int jj = d - 1; jj >= 0; --jj) {
                if (degenerate_at(X, k, jj)) {
                    SimplexKey y = X.face(k, jj);
                    int ycid = class_of[d - 1][index[d - 1].at(y)];
                    SimplexKey yn = normal_of_class(d - 1, ycid);
                    return Q.degeneracy(yn, jj);
                }
            }
            (void)j;
        }
        throw std::runtime_error("quotient: degenerate class without degenerate member");
    };
    // faces
    for (int d = 1; d <= D; ++d)
        for (int c = 0; c < Q.cell_count(d); ++c) {
            int cid = cell_class[d][c];
            const SimplexKey& rep = alls[d][classes[d][cid].front()];
            std::vector<SimplexKey> fs;
            for (int i = 0; i <= d; ++i) {
                SimplexKey f = X.face(rep, i);
                int fcid = class_of[d - 1][index[d - 1].at(f)];
                fs.push_back(normal_of_class(d - 1, fcid));
            }
            Q.faces[d][c] = std::move(fs);
        }
    // the projection map
    R.map.resize(D + 1);
    for (int d = 0; d <= D; ++d)
        for (int c = 0; c < X.cell_count(d); ++c) {
            SimplexKey k{d, c, {}};
            int cid = class_of[d][index[d].at(k)];
            R.map[d].push_back(normal_of_class(d, cid));
        }
    return R;
}

PushoutResult pushout(const SSetMap& i, const SSetMap& f) {
    const PresentedSSet& A = *i.src;
    const PresentedSSet& B = *i.dst;
    const PresentedSSet& C = *f.dst;
    if (f.src != i.src) throw std::invalid_argument("pushout: maps must share source");
    // monomorphism check for i (injective on simplices in every dim)
    for (int d = 0; d <= A.max_dim; ++d) {
        std::set<SimplexKey> seen;
        for (const auto& k : A.all_simplices(d)) {
            SimplexKey v = i.apply(k);
            if (!seen.insert(v).second) throw std::invalid_argument("pushout: i is not a mono");
        }
    }
    int D = std::max(B.max_dim, C.max_dim);
    PresentedSSet U(D);
    // disjoint union, deterministic prefixes
    auto import = [&](const PresentedSSet& S, const std::string& pre,
                      std::vector<std::vector<SimplexKey>>& tab) {
        tab.resize(S.max_dim + 1);
        for (int d = 0; d <= S.max_dim; ++d)
            for (int c = 0; c < S.cell_count(d); ++c) {
                int idx = U.add_cell(d, pre + S.cells[d][c]);
                tab[d].push_back(SimplexKey{d, idx, {}});
            }
        for (int d = 1; d <= S.max_dim; ++d)
            for (int c = 0; c < S.cell_count(d); ++c) {
                std::vector<SimplexKey> fs;
                for (int k = 0; k <= d; ++k) {
                    SimplexKey fk = S.faces[d][c][k];
                    SimplexKey base = tab[fk.base_dim()][fk.cell];
                    fs.push_back(U.apply_word(base, fk.word));
                }
                U.faces[d][tab[d][c].cell] = std::move(fs);
            }
    };
    std::vector<std::vector<SimplexKey>> tb, tc;
    import(B, "B.", tb);
    import(C, "C.", tc);
    auto lift = [&](const std::vector<std::vector<SimplexKey>>& tab, const SimplexKey& k) {
        return U.apply_word(tab[k.base_dim()][k.cell], k.word);
    };
    std::vector<std::pair<SimplexKey, SimplexKey>> gens;
    for (int d = 0; d <= A.max_dim; ++d)
        for (int c = 0; c < A.cell_count(d); ++c) {
            SimplexKey k{d, c, {}};
            gens.emplace_back(lift(tb, i.apply(k)), lift(tc, f.apply(k)));
        }
    QuotientResult qr = quotient_presented(U, gens);
    SSetMap qmap = as_map(U, qr.quot, qr.map);
    PushoutResult R;
    R.from_b.resize(B.max_dim + 1);
    for (int d = 0; d <= B.max_dim; ++d)
        for (int c = 0; c < B.cell_count(d); ++c)
            R.from_b[d].push_back(qmap.apply(lift(tb, SimplexKey{d, c, {}})));
    R.from_c.resize(C.max_dim + 1);
    for (int d = 0; d <= C.max_dim; ++d)
        for (int c = 0; c < C.cell_count(d); ++c)
            R.from_c[d].push_back(qmap.apply(lift(tc, SimplexKey{d, c, {}})));
    R.po = std::move(qr.quot);
    return R;
}

// ---- coskeletal extension -----------------------------------------------------

std::vector<std::vector<SimplexKey>> boundary_tuples(const PresentedSSet& x, int n) {
    std::vector<std::vector<SimplexKey>> out;
    std::vector<SimplexKey> lower = x.all_simplices(n - 1);
    std::vector<SimplexKey> t;
    std::function<void()> rec = [&]() {
        int i = static_cast<int>(t.size());
        if (i == n + 1) {
            out.push_back(t);
            return;
        }
        for (const auto& cand : lower) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                // need d_j(t_i) = d_{i-1}(t_j)
                if (x.face(cand, j) != x.face(t[j], i - 1)) ok = false;
            }
            if (!ok) continue;
            t.push_back(cand);
            rec();
            t.pop_back();
        }
    };
    rec();
    return out;
}

void coskeletal_extend(PresentedSSet& x, int from_dim, int to_dim) {
    for (int n = from_dim + 1; n <= to_dim; ++n) {
        if (x.max_dim < n) x.resize_dims(n);
        std::set<std::vector<SimplexKey>> degen;
        for (const auto& y : x.all_simplices(n - 1))
            for (int j = 0; j <= n - 1; ++j) {
                SimplexKey s = x.degeneracy(y, j);
                std::vector<SimplexKey> t;
                for (int i = 0; i <= n; ++i) t.push_back(x.face(s, i));
                degen.insert(std::move(t));
            }
        auto tuples = boundary_tuples(x, n);
        std::vector<std::pair<std::string, std::vector<SimplexKey>>> named;
        for (auto& t : tuples) {
            if (degen.count(t)) continue;
            std::string nm = "[";
            for (size_t i = 0; i < t.size(); ++i) nm += (i ? ";" : "") + x.key_string(t[i]);
            nm += "]";
            named.emplace_back(std::move(nm), t);
        }
        std::stable_sort(named.begin(), named.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [nm, t] : named) x.add_cell(n, nm, t);
    }
}

// ---- enumerators ---------------------------------------------------------------

SimplexEnumerator SimplexEnumerator::of(const PresentedSSet& x) {
    SimplexEnumerator e;
    e.kind = Kind::Presented;
    e.presented = &x;
    return e;
}
SimplexEnumerator SimplexEnumerator::product(const SimplexEnumerator& a, const SimplexEnumerator& b) {
    SimplexEnumerator e;
    e.kind = Kind::Product;
    e.left = &a;
    e.right = &b;
    return e;
}
SimplexEnumerator SimplexEnumerator::nerve(const Poset& p) {
    SimplexEnumerator e;
    e.kind = Kind::Nerve;
    e.poset = &p;
    return e;
}
SimplexEnumerator SimplexEnumerator::quotient(const SimplexEnumerator& x,
                                              std::vector<std::pair<SimplexKey, SimplexKey>> gens) {
    SimplexEnumerator e;
    e.kind = Kind::Quotient;
    e.inner = &x;
    e.gens = std::move(gens);
    return e;
}

PresentedSSet materialize(const SimplexEnumerator& e, int D) {
    switch (e.kind) {
    case SimplexEnumerator::Kind::Presented: {
        PresentedSSet x = *e.presented;
        if (x.max_dim > D) {
            // truncate
            PresentedSSet y(D);
            for (int d = 0; d <= D; ++d) {
                y.cells[d] = x.cells[d];
                y.faces[d] = x.faces[d];
            }
            y.coskeletal_above = x.coskeletal_above;
            x = std::move(y);
        } else if (x.max_dim < D) {
            if (x.coskeletal_above)
                coskeletal_extend(x, std::max(x.max_dim, *x.coskeletal_above), D);
            else
                x.resize_dims(D);
        }
        x.validate();
        return x;
    }
    case SimplexEnumerator::Kind::Product: {
        PresentedSSet a = materialize(*e.left, D);
        PresentedSSet b = materialize(*e.right, D);
        ProductResult pr = product_presented(a, b, D);
        pr.prod.validate();
        return pr.prod;
    }
    case SimplexEnumerator::Kind::Nerve: {
        PresentedSSet x = nerve_of_poset(*e.poset, D);
        x.validate();
        return x;
    }
    case SimplexEnumerator::Kind::Quotient: {
        PresentedSSet x = materialize(*e.inner, D);
        QuotientResult q = quotient_presented(x, e.gens);
        q.quot.validate();
        return q.quot;
    }
    }
    throw std::logic_error("materialize: bad kind");
}

// ---- json ----------------------------------------------------------------------

std::string to_json(const PresentedSSet& x) {
    json j;
    j["max_dim"] = x.max_dim;
    j["cells"] = x.cells;
    json fj = json::object();
    for (int d = 1; d <= x.max_dim; ++d)
        for (int c = 0; c < x.cell_count(d); ++c) {
            json arr = json::array();
            for (const auto& k : x.faces[d][c]) arr.push_back(x.key_string(k));
            fj[x.cells[d][c]] = arr;
        }
    j["faces"] = fj;
    if (x.coskeletal_above)
        j["coskeletal_above"] = *x.coskeletal_above;
    else
        j["coskeletal_above"] = nullptr;
    return j.dump(2);
}

PresentedSSet sset_from_json(const std::string& js) {
    json j = json::parse(js);
    PresentedSSet x(j.at("max_dim").get<int>());
    auto cs = j.at("cells").get<std::vector<std::vector<std::string>>>();
    for (int d = 0; d < static_cast<int>(cs.size()); ++d)
        for (auto& nm : cs[d]) x.add_cell(d, nm);
    for (int d = 1; d <= x.max_dim; ++d)
        for (int c = 0; c < x.cell_count(d); ++c) {
            auto arr = j.at("faces").at(x.cells[d][c]).get<std::vector<std::string>>();
            std::vector<SimplexKey> fs;
            for (auto& s : arr) fs.push_back(x.parse_key(s));
            x.faces[d][c] = std::move(fs);
        }
    if (!j.at("coskeletal_above").is_null()) x.coskeletal_above = j["coskeletal_above"].get<int>();
    x.validate();
    return x;
}

} // namespace dsset
