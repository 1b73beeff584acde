#include "dsset/decor.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace dsset {

using nlohmann::json;

std::string to_string(Flavor f) {
    switch (f) {
    case Flavor::SC: return "SC";
    case Flavor::Marked: return "Marked";
    case Flavor::MS: return "MS";
    case Flavor::MB: return "MB";
    }
    return "?";
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "SC") return Flavor::SC;
    if (s == "Marked") return Flavor::Marked;
    if (s == "MS") return Flavor::MS;
    if (s == "MB") return Flavor::MB;
    throw std::invalid_argument("unknown flavor: " + s);
}

bool DecoratedSSet::is_marked(const SimplexKey& e) const {
    if (e.dim != 1) throw std::invalid_argument("is_marked: not an edge");
    if (e.degenerate()) return true;
    return has_marking() && dec.marked.count(e.cell) > 0;
}

bool DecoratedSSet::is_thin(const SimplexKey& t) const {
    if (t.dim != 2) throw std::invalid_argument("is_thin: not a triangle");
    if (t.degenerate()) return true;
    return has_thin() && dec.thin.count(t.cell) > 0;
}

bool DecoratedSSet::is_lean(const SimplexKey& t) const {
    if (t.dim != 2) throw std::invalid_argument("is_lean: not a triangle");
    if (t.degenerate()) return true;
    if (flavor == Flavor::MB) return dec.lean.count(t.cell) > 0;
    return is_thin(t); // collapsed biscaling
}

void DecoratedSSet::validate() const {
    base.validate();
    auto in_range = [&](const std::set<int>& s, int dim) {
        for (int c : s)
            if (c < 0 || c >= base.cell_count(dim))
                throw std::runtime_error("decoration key out of range");
    };
    if (!has_marking() && !dec.marked.empty())
        throw std::runtime_error("flavor " + to_string(flavor) + " carries marking data");
    if (!has_thin() && !dec.thin.empty())
        throw std::runtime_error("flavor " + to_string(flavor) + " carries thin data");
    if (!has_lean() && !dec.lean.empty())
        throw std::runtime_error("flavor " + to_string(flavor) + " carries lean data");
    in_range(dec.marked, 1);
    in_range(dec.thin, 2);
    in_range(dec.lean, 2);
    if (flavor == Flavor::MB)
        for (int t : dec.thin)
            if (!dec.lean.count(t)) throw std::runtime_error("thin triangle not lean");
}

DecoratedSSet decorate(PresentedSSet base, Flavor f) {
    DecoratedSSet x;
    x.base = std::move(base);
    x.flavor = f;
    return x;
}

DecoratedSSet simplex_dec(int n, Flavor f) { return decorate(standard_simplex(n), f); }

DecoratedSSet sharpen(const DecoratedSSet& x, Field field, const std::vector<SimplexKey>& keys,
                      std::vector<int>* repaired) {
    DecoratedSSet y = x;
    for (const auto& k : keys) {
        if (k.degenerate()) continue;
        int want_dim = field == Field::Marking ? 1 : 2;
        if (k.dim != want_dim) throw std::invalid_argument("sharpen: key of wrong dimension");
        if (k.cell < 0 || k.cell >= y.base.cell_count(want_dim))
            throw std::invalid_argument("sharpen: key not in base");
        switch (field) {
        case Field::Marking:
            if (!y.has_marking()) throw std::invalid_argument("sharpen: flavor has no marking");
            y.dec.marked.insert(k.cell);
            break;
        case Field::Thin:
            if (!y.has_thin()) throw std::invalid_argument("sharpen: flavor has no scaling");
            y.dec.thin.insert(k.cell);
            if (y.flavor == Flavor::MB && !y.dec.lean.count(k.cell)) {
                y.dec.lean.insert(k.cell);
                if (repaired) repaired->push_back(k.cell);
            }
            break;
        case Field::Lean:
            if (!y.has_lean()) throw std::invalid_argument("sharpen: flavor has no biscaling");
            y.dec.lean.insert(k.cell);
            break;
        }
    }
    y.validate();
    return y;
}

DecoratedSSet sharpen_all(const DecoratedSSet& x, Field field) {
    std::vector<SimplexKey> ks;
    int dim = field == Field::Marking ? 1 : 2;
    for (int c = 0; c < x.base.cell_count(dim); ++c) ks.push_back(SimplexKey{dim, c, {}});
    return sharpen(x, field, ks);
}

DecoratedSSet convert(const DecoratedSSet& x, ConvertFunctor f) {
    DecoratedSSet y = x;
    switch (f) {
    case ConvertFunctor::D: // MS -> MB, T <= T
        if (x.flavor != Flavor::MS) throw std::invalid_argument("D: expects MS");
        y.flavor = Flavor::MB;
        y.dec.lean = x.dec.thin;
        break;
    case ConvertFunctor::R_ms: // MB -> MS, drop lean
        if (x.flavor != Flavor::MB) throw std::invalid_argument("R_ms: expects MB");
        y.flavor = Flavor::MS;
        y.dec.lean.clear();
        break;
    case ConvertFunctor::L: // MB -> MS, thin := lean
        if (x.flavor != Flavor::MB) throw std::invalid_argument("L: expects MB");
        y.flavor = Flavor::MS;
        y.dec.thin = x.dec.lean;
        y.dec.lean.clear();
        break;
    case ConvertFunctor::R_mb: // MS -> MB, T <= T (right adjoint of L)
        if (x.flavor != Flavor::MS) throw std::invalid_argument("R_mb: expects MS");
        y.flavor = Flavor::MB;
        y.dec.lean = x.dec.thin;
        break;
    case ConvertFunctor::FlatToMs: // SC -> MS, minimal marking
        if (x.flavor != Flavor::SC) throw std::invalid_argument("flat_to_ms: expects SC");
        y.flavor = Flavor::MS;
        break;
    case ConvertFunctor::G: // MS -> SC, drop marking
        if (x.flavor != Flavor::MS) throw std::invalid_argument("G: expects MS");
        y.flavor = Flavor::SC;
        y.dec.marked.clear();
        break;
    case ConvertFunctor::I: // Marked -> MB, thin = lean = all
        if (x.flavor != Flavor::Marked) throw std::invalid_argument("I: expects Marked");
        y.flavor = Flavor::MB;
        for (int c = 0; c < x.base.cell_count(2); ++c) {
            y.dec.thin.insert(c);
            y.dec.lean.insert(c);
        }
        break;
    }
    y.validate();
    return y;
}

DecoratedSSet decorated_product(const DecoratedSSet& x, const DecoratedSSet& y, int D) {
    if (x.flavor != y.flavor) throw std::invalid_argument("decorated_product: flavor mismatch");
    ProductResult pr = product_presented(x.base, y.base, D);
    DecoratedSSet p = decorate(std::move(pr.prod), x.flavor);
    for (int c = 0; c < p.base.cell_count(1); ++c) {
        const SimplexKey &a = pr.to_left[1][c], &b = pr.to_right[1][c];
        if (p.has_marking() && x.is_marked(a) && y.is_marked(b)) p.dec.marked.insert(c);
    }
    for (int c = 0; c < p.base.cell_count(2); ++c) {
        const SimplexKey &a = pr.to_left[2][c], &b = pr.to_right[2][c];
        if (p.has_thin() && x.is_thin(a) && y.is_thin(b)) p.dec.thin.insert(c);
        if (p.has_lean() && x.is_lean(a) && y.is_lean(b)) p.dec.lean.insert(c);
    }
    p.validate();
    return p;
}

bool DecoratedMap::valid(std::string* why) const {
    if (!map.valid(why)) return false;
    const DecoratedSSet& s = *src;
    const DecoratedSSet& d = *dst;
    if (s.has_marking() && d.has_marking())
        for (int c : s.dec.marked)
            if (!d.is_marked(map.apply(SimplexKey{1, c, {}}))) {
                if (why) *why = "marked edge " + s.base.cells[1][c] + " not preserved";
                return false;
            }
    if (s.has_thin() && d.has_thin())
        for (int c : s.dec.thin)
            if (!d.is_thin(map.apply(SimplexKey{2, c, {}}))) {
                if (why) *why = "thin triangle " + s.base.cells[2][c] + " not preserved";
                return false;
            }
    if (s.has_lean() && d.has_lean())
        for (int c : s.dec.lean)
            if (!d.is_lean(map.apply(SimplexKey{2, c, {}}))) {
                if (why) *why = "lean triangle " + s.base.cells[2][c] + " not preserved";
                return false;
            }
    return true;
}

DecoratedMap decorated_map(const DecoratedSSet& src, const DecoratedSSet& dst, MapTable table) {
    DecoratedMap m;
    m.src = &src;
    m.dst = &dst;
    m.map.src = &src.base;
    m.map.dst = &dst.base;
    m.map.image = std::move(table);
    return m;
}

std::string to_json(const DecoratedSSet& x) {
    json j = json::parse(to_json(x.base));
    j["flavor"] = to_string(x.flavor);
    json d;
    auto names = [&](const std::set<int>& s, int dim) {
        json arr = json::array();
        for (int c : s) arr.push_back(x.base.cells[dim][c]);
        return arr;
    };
    d["marked"] = names(x.dec.marked, 1);
    d["thin"] = names(x.dec.thin, 2);
    d["lean"] = names(x.dec.lean, 2);
    j["decoration"] = d;
    return j.dump(2);
}

DecoratedSSet decorated_from_json(const std::string& js) {
    json j = json::parse(js);
    DecoratedSSet x;
    x.base = sset_from_json(js);
    x.flavor = flavor_from_string(j.at("flavor").get<std::string>());
    auto read = [&](const char* field, int dim) {
        std::set<int> out;
        for (auto& nm : j.at("decoration").at(field)) {
            int idx = x.base.cell_index(dim, nm.get<std::string>());
            if (idx < 0) throw std::runtime_error("decoration names unknown cell");
            out.insert(idx);
        }
        return out;
    };
    x.dec.marked = read("marked", 1);
    x.dec.thin = read("thin", 2);
    x.dec.lean = read("lean", 2);
    x.validate();
    return x;
}

std::string to_dot(const DecoratedSSet& x) {
    std::ostringstream os;
    os << "digraph sset {\n";
    for (int c = 0; c < x.base.cell_count(0); ++c)
        os << "  \"" << x.base.cells[0][c] << "\";\n";
    for (int c = 0; c < x.base.cell_count(1); ++c) {
        SimplexKey e{1, c, {}};
        auto v0 = x.base.face(e, 1); // source vertex
        auto v1 = x.base.face(e, 0);
        os << "  \"" << x.base.key_string(v0) << "\" -> \"" << x.base.key_string(v1) << "\""
           << " [label=\"" << x.base.cells[1][c] << "\"";
        if (x.has_marking() && x.dec.marked.count(c)) os << ", style=bold";
        os << "];\n";
    }
    os << "  labelloc=\"b\";\n  label=\"thin: " << x.dec.thin.size()
       << "  lean: " << x.dec.lean.size() << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace dsset
