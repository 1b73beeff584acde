#pragma once

#include "dsset/sset.hpp"

namespace dsset {

enum class Flavor { SC, Marked, MS, MB };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

/* Decoration sets hold nondegenerate cell indices only; degenerate edges are
 * always marked and degenerate triangles always thin/lean. */
struct Decoration {
    std::set<int> marked; // 1-cells
    std::set<int> thin;   // 2-cells
    std::set<int> lean;   // 2-cells (MB only)
};

struct DecoratedSSet {
    PresentedSSet base;
    Flavor flavor = Flavor::SC;
    Decoration dec;

    bool has_marking() const { return flavor != Flavor::SC; }
    bool has_thin() const { return flavor != Flavor::Marked; }
    bool has_lean() const { return flavor == Flavor::MB; }

    bool is_marked(const SimplexKey& e) const;
    bool is_thin(const SimplexKey& t) const;
    bool is_lean(const SimplexKey& t) const;

    void validate() const; // flavor fields, key ranges, thin <= lean
    bool operator==(const DecoratedSSet&) const = default;
};

/* helpers building decorated objects over a fresh base */
DecoratedSSet decorate(PresentedSSet base, Flavor f);
DecoratedSSet simplex_dec(int n, Flavor f); // flat everywhere

enum class Field { Marking, Thin, Lean };

/* Enlarges one decoration field; "all" selects every nondegenerate cell of the
 * right dimension. In MB flavor a thin key below an absent lean key triggers
 * automatic lean insertion; `repaired` reports those cells. */
DecoratedSSet sharpen(const DecoratedSSet& x, Field field, const std::vector<SimplexKey>& keys,
                      std::vector<int>* repaired = nullptr);
DecoratedSSet sharpen_all(const DecoratedSSet& x, Field field);

enum class ConvertFunctor { D, R_ms, L, R_mb, FlatToMs, G, I };

DecoratedSSet convert(const DecoratedSSet& x, ConvertFunctor f);

/* Componentwise product: a simplex is decorated iff both projections are. */
DecoratedSSet decorated_product(const DecoratedSSet& x, const DecoratedSSet& y, int D);

struct DecoratedMap {
    SSetMap map;
    const DecoratedSSet* src = nullptr;
    const DecoratedSSet* dst = nullptr;

    bool valid(std::string* why = nullptr) const; // marked->marked, thin->thin, lean->lean
};

DecoratedMap decorated_map(const DecoratedSSet& src, const DecoratedSSet& dst, MapTable table);

std::string to_json(const DecoratedSSet& x);
DecoratedSSet decorated_from_json(const std::string& js);

std::string to_dot(const DecoratedSSet& x); // 1-skeleton; marked edges bold

} // namespace dsset
