#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsset {

/* A simplex in Eilenberg-Zilber normal form: a degeneracy word (strictly
 * decreasing) applied to a nondegenerate cell. `dim` is the dimension of the
 * expressed simplex; the underlying cell lives in dimension dim - word.size(). */
struct SimplexKey {
    int dim = 0;
    int cell = -1;
    std::vector<int> word;

    int base_dim() const { return dim - static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }
    auto operator<=>(const SimplexKey&) const = default;
};

std::string to_string(const SimplexKey& k);

/* A finite simplicial set truncated at max_dim. Only nondegenerate cells are
 * stored; all faces are recorded as SimplexKeys in normal form. */
class PresentedSSet {
public:
    int max_dim = 0;
    std::optional<int> coskeletal_above;
    std::vector<std::vector<std::string>> cells;             // names per dim
    std::vector<std::vector<std::vector<SimplexKey>>> faces; // [dim][cell][i]

    PresentedSSet() { resize_dims(0); }
    explicit PresentedSSet(int d) { resize_dims(d); }

    void resize_dims(int d);
    int cell_count(int d) const;
    int total_cells() const;

    int add_cell(int dim, const std::string& name, std::vector<SimplexKey> fs = {});
    const std::string& cell_name(int dim, int idx) const { return cells[dim][idx]; }
    int cell_index(int dim, const std::string& name) const; // -1 if absent

    // face/degeneracy calculus on arbitrary keys
    SimplexKey face(const SimplexKey& k, int i) const;
    SimplexKey degeneracy(const SimplexKey& k, int j) const;
    SimplexKey apply_word(const SimplexKey& k, const std::vector<int>& word) const;

    // all simplices of dimension d, degenerate ones included
    std::vector<SimplexKey> all_simplices(int d) const;

    // iterated 0-dimensional faces, in vertex order
    std::vector<SimplexKey> vertices(const SimplexKey& k) const;

    std::string key_string(const SimplexKey& k) const;
    SimplexKey parse_key(const std::string& s) const;

    // throws std::runtime_error naming the offending cell on failure
    void validate() const;

    bool operator==(const PresentedSSet& o) const {
        return max_dim == o.max_dim && coskeletal_above == o.coskeletal_above &&
               cells == o.cells && faces == o.faces;
    }

private:
    mutable std::map<std::string, std::pair<int, int>> name_index_;
    void rebuild_index() const;
};

/* Map of simplicial sets, recorded on nondegenerate source cells. */
struct SSetMap {
    const PresentedSSet* src = nullptr;
    const PresentedSSet* dst = nullptr;
    std::vector<std::vector<SimplexKey>> image; // [dim][cell]

    SimplexKey apply(const SimplexKey& k) const;
    bool valid(std::string* why = nullptr) const;
};

// image table of a map, indexed [dim][cell]
using MapTable = std::vector<std::vector<SimplexKey>>;

SSetMap identity_map(const PresentedSSet& x);
SSetMap compose(const SSetMap& f, const SSetMap& g); // g after f
SSetMap as_map(const PresentedSSet& src, const PresentedSSet& dst, const MapTable& t);

// ---- constructors ----------------------------------------------------------

PresentedSSet standard_simplex(int n);
PresentedSSet horn(int n, int i);

// vertex-subset name for simplex cells: "013" etc. (two digits per vertex when n>9 never happens here)
std::string subset_name(const std::vector<int>& verts);
std::vector<int> parse_subset_name(const std::string& s);

/* A finite poset; elements carry names, order given by leq. */
struct Poset {
    std::vector<std::string> elems;
    std::vector<std::vector<bool>> leq; // leq[a][b] : a <= b

    int size() const { return static_cast<int>(elems.size()); }
    bool less(int a, int b) const { return a != b && leq[a][b]; }
    void validate() const; // reflexive, antisymmetric, transitive
    std::vector<std::pair<int, int>> hasse_edges() const;
};

PresentedSSet nerve_of_poset(const Poset& p, int D);

// inclusion of horn(n,i) into standard_simplex(n); both owned by the caller
SSetMap horn_inclusion(const PresentedSSet& h, const PresentedSSet& simp, int n, int i);

// ---- enumerator + materialization ------------------------------------------

/* Lazily evaluated views; materialize() produces a PresentedSSet.
 * Deterministic cell ordering: lexicographic on canonical names. */
class SimplexEnumerator {
public:
    enum class Kind { Presented, Product, Nerve, Quotient };
    Kind kind = Kind::Presented;

    // Presented
    const PresentedSSet* presented = nullptr;
    // Product
    const SimplexEnumerator* left = nullptr;
    const SimplexEnumerator* right = nullptr;
    // Nerve
    const Poset* poset = nullptr;
    // Quotient
    const SimplexEnumerator* inner = nullptr;
    std::vector<std::pair<SimplexKey, SimplexKey>> gens; // keys in materialize(inner)

    static SimplexEnumerator of(const PresentedSSet& x);
    static SimplexEnumerator product(const SimplexEnumerator& a, const SimplexEnumerator& b);
    static SimplexEnumerator nerve(const Poset& p);
    static SimplexEnumerator quotient(const SimplexEnumerator& x,
                                      std::vector<std::pair<SimplexKey, SimplexKey>> gens);
};

PresentedSSet materialize(const SimplexEnumerator& e, int D);

/* Product of presented sets; projection tables index cells of prod. */
struct ProductResult {
    PresentedSSet prod;
    MapTable to_left;
    MapTable to_right;
};
ProductResult product_presented(const PresentedSSet& a, const PresentedSSet& b, int D);

/* Quotient of x by the simplicial congruence generated by gens (all degrees <= x.max_dim). */
struct QuotientResult {
    PresentedSSet quot;
    MapTable map; // x -> quot
};
QuotientResult quotient_presented(const PresentedSSet& x,
                                  const std::vector<std::pair<SimplexKey, SimplexKey>>& gens);

/* Pushout of b <-i- a -f-> c along a monomorphism i. */
struct PushoutResult {
    PresentedSSet po;
    MapTable from_b;
    MapTable from_c;
};
PushoutResult pushout(const SSetMap& i, const SSetMap& f);

/* Adds cells in dims (from_dim, to_dim] as boundary-compatible tuples. */
void coskeletal_extend(PresentedSSet& x, int from_dim, int to_dim);

// all compatible boundary tuples in dimension n (each tuple has n+1 faces)
std::vector<std::vector<SimplexKey>> boundary_tuples(const PresentedSSet& x, int n);

// ---- serialization ----------------------------------------------------------

std::string to_json(const PresentedSSet& x);
PresentedSSet sset_from_json(const std::string& js);

} // namespace dsset
