#ifndef NCM_MAGMA_HPP
#define NCM_MAGMA_HPP

#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncm {

// Finite magmas use labels 0..m-1 (indices into the element list).
// The infinite magma Z uses the integer itself as its label.
using Label = std::int64_t;

class Magma;
using MagmaPtr = std::shared_ptr<const Magma>;

class Magma {
public:
    // Finite magma from a Cayley table given row-major over element indices.
    // Entries outside [0, m) are kept so that check_unitary can report them.
    static MagmaPtr from_table(std::string name, std::vector<std::string> names, Label unit,
                               std::vector<Label> table) {
        auto m = std::shared_ptr<Magma>(new Magma());
        const auto n = names.size();
        if (table.size() != n * n)
            throw std::invalid_argument("magma table must have m*m entries");
        if (unit < 0 || static_cast<std::size_t>(unit) >= n)
            throw std::invalid_argument("magma unit is not an element");
        std::set<std::string> seen(names.begin(), names.end());
        if (seen.size() != n) throw std::invalid_argument("magma element names must be distinct");
        m->name_ = std::move(name);
        m->finite_ = true;
        m->names_ = std::move(names);
        m->unit_ = unit;
        m->table_ = std::move(table);
        return m;
    }

    // Additive integers; only op/unit/equality are available.
    static MagmaPtr integers() {
        auto m = std::shared_ptr<Magma>(new Magma());
        m->name_ = "Z";
        m->finite_ = false;
        m->unit_ = 0;
        return m;
    }

    const std::string& name() const { return name_; }
    bool finite() const { return finite_; }
    Label unit() const { return unit_; }
    bool is_unit(Label x) const { return x == unit_; }

    std::size_t size() const {
        require_finite("size");
        return names_.size();
    }

    Label op(Label x, Label y) const {
        if (!finite_) return x + y;
        const auto m = static_cast<Label>(names_.size());
        if (x < 0 || x >= m || y < 0 || y >= m) throw std::out_of_range("label outside magma");
        Label r = table_[static_cast<std::size_t>(x * m + y)];
        if (r < 0 || r >= m) throw std::domain_error("magma table is not closed");
        return r;
    }

    // Raw table access without closure validation.
    Label raw(Label x, Label y) const {
        require_finite("raw");
        return table_[static_cast<std::size_t>(x * static_cast<Label>(names_.size()) + y)];
    }

    std::vector<Label> elements() const {
        require_finite("elements");
        std::vector<Label> out(names_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Label>(i);
        return out;
    }

    std::vector<Label> non_unit_elements() const {
        std::vector<Label> out;
        for (Label x : elements())
            if (x != unit_) out.push_back(x);
        return out;
    }

    bool contains(Label x) const {
        if (!finite_) return true;
        return x >= 0 && x < static_cast<Label>(names_.size());
    }

    std::string label_name(Label x) const {
        if (!finite_) return std::to_string(x);
        if (!contains(x)) return "?" + std::to_string(x);
        return names_[static_cast<std::size_t>(x)];
    }

    Label parse_label(const std::string& s) const {
        if (!finite_) {
            std::size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("bad integer label: " + s);
            return v;
        }
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == s) return static_cast<Label>(i);
        throw std::invalid_argument("unknown label '" + s + "' in magma " + name_);
    }

    const std::vector<std::string>& names() const { return names_; }

    void require_finite(const char* what) const {
        if (!finite_)
            throw std::logic_error(std::string(what) + " requires a finite magma (got " + name_ + ")");
    }

private:
    Magma() = default;
    std::string name_;
    bool finite_ = true;
    std::vector<std::string> names_;
    Label unit_ = 0;
    std::vector<Label> table_;
};

struct Violation {
    std::string axiom;
    Label x = 0;
    Label y = 0;
    std::string detail;
};

inline std::vector<Violation> check_unitary(const Magma& m) {
    m.require_finite("check_unitary");
    std::vector<Violation> out;
    const auto els = m.elements();
    for (Label x : els)
        for (Label y : els) {
            Label r = m.raw(x, y);
            if (!m.contains(r))
                out.push_back({"closure", x, y,
                               m.label_name(x) + "*" + m.label_name(y) + " is outside the element set"});
        }
    const Label u = m.unit();
    for (Label x : els) {
        if (m.raw(u, x) != x)
            out.push_back({"left unit", u, x, "1*" + m.label_name(x) + " = " + m.label_name(m.raw(u, x))});
        if (m.raw(x, u) != x)
            out.push_back({"right unit", x, u, m.label_name(x) + "*1 = " + m.label_name(m.raw(x, u))});
    }
    return out;
}

inline bool is_associative(const Magma& m) {
    const auto els = m.elements();
    for (Label x : els)
        for (Label y : els)
            for (Label z : els)
                if (m.op(m.op(x, y), z) != m.op(x, m.op(y, z))) return false;
    return true;
}

inline bool quasi_injective(const Magma& m, const std::vector<Label>& E, const std::vector<Label>& B) {
    m.require_finite("quasi_injective");
    for (Label x : E)
        for (Label y : B)
            for (Label x2 : E)
                for (Label y2 : B) {
                    Label r = m.op(x, y);
                    if (r == m.unit() || r != m.op(x2, y2)) continue;
                    if (x != x2 || y != y2) return false;
                }
    return true;
}

inline bool right_cancelable(const Magma& m) {
    const auto els = m.elements();
    for (Label z : els)
        for (Label x : els)
            for (Label y : els)
                if (x != y && m.op(x, z) == m.op(y, z)) return false;
    return true;
}

inline MagmaPtr cyclic(int l) {
    if (l < 1) throw std::invalid_argument("N needs a parameter >= 1");
    std::vector<std::string> names;
    for (int i = 0; i < l; ++i) names.push_back(std::to_string(i));
    std::vector<Label> t(static_cast<std::size_t>(l * l));
    for (int x = 0; x < l; ++x)
        for (int y = 0; y < l; ++y) t[static_cast<std::size_t>(x * l + y)] = (x + y) % l;
    return Magma::from_table("N:" + std::to_string(l), names, 0, t);
}

// Index 0 is "1", index 1 is "0".
inline MagmaPtr d0() {
    return Magma::from_table("D0", {"1", "0"}, 0, {0, 1, 1, 1});
}

// Subsets of [l] under union; label = bitmask.
inline MagmaPtr subsets(int l) {
    if (l < 0 || l > 10) throw std::invalid_argument("S needs a parameter in [0, 10]");
    const int n = 1 << l;
    std::vector<std::string> names;
    for (int s = 0; s < n; ++s) {
        std::string name = "{";
        bool first = true;
        for (int j = 0; j < l; ++j)
            if (s & (1 << j)) {
                if (!first) name += ",";
                name += std::to_string(j + 1);
                first = false;
            }
        names.push_back(name + "}");
    }
    std::vector<Label> t(static_cast<std::size_t>(n * n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[static_cast<std::size_t>(x * n + y)] = x | y;
    return Magma::from_table("S:" + std::to_string(l), names, 0, t);
}

// {1, e1, e2} with ei * ej = 1.
inline MagmaPtr e2() {
    return Magma::from_table("E:2", {"1", "e1", "e2"}, 0, {0, 1, 2, 1, 0, 0, 2, 0, 0});
}

// {1, a, b}: a*a = a, b*b = b, a*b = b*a = 1.
inline MagmaPtr bnc() {
    return Magma::from_table("BNC", {"1", "a", "b"}, 0, {0, 1, 2, 1, 1, 0, 2, 0, 2});
}

inline MagmaPtr builtin(const std::string& name, int parameter = 0) {
    if (name == "N") return cyclic(parameter);
    if (name == "D0") return d0();
    if (name == "S") return subsets(parameter);
    if (name == "E") {
        if (parameter != 2) throw std::invalid_argument("builtin E supports only E:2; use a table file");
        return e2();
    }
    if (name == "BNC") return bnc();
    if (name == "Z") return Magma::integers();
    throw std::invalid_argument("unknown builtin magma: " + name);
}

// Text table format:
//   elements: 1 a b
//   unit: 1
//   table:
//   1 a b
//   a a 1
//   b 1 b
// Row x, column y holds x*y. '#' starts a comment.
inline MagmaPtr parse_magma_table(std::istream& in, const std::string& name) {
    std::vector<std::string> names;
    std::string unit_name;
    std::vector<std::vector<std::string>> rows;
    bool in_table = false;
    std::string line;
    while (std::getline(in, line)) {
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok[0] == "elements:") {
            names.assign(tok.begin() + 1, tok.end());
        } else if (tok[0] == "unit:") {
            if (tok.size() != 2) throw std::invalid_argument("unit: expects one element");
            unit_name = tok[1];
        } else if (tok[0] == "table:") {
            in_table = true;
        } else if (in_table) {
            rows.push_back(tok);
        } else {
            throw std::invalid_argument("unexpected line in magma table: " + line);
        }
    }
    if (names.empty()) throw std::invalid_argument("magma table lists no elements");
    if (rows.size() != names.size()) throw std::invalid_argument("magma table needs one row per element");
    auto index_of = [&](const std::string& s) -> Label {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return static_cast<Label>(i);
        return -1;
    };
    Label u = index_of(unit_name);
    if (u < 0) throw std::invalid_argument("unit is not among the elements");
    std::vector<Label> table;
    for (const auto& r : rows) {
        if (r.size() != names.size()) throw std::invalid_argument("magma table row has wrong length");
        for (const auto& s : r) table.push_back(index_of(s));
    }
    return Magma::from_table(name, names, u, table);
}

inline MagmaPtr load_magma_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open magma file: " + path);
    std::string stem = path;
    if (auto s = stem.find_last_of('/'); s != std::string::npos) stem = stem.substr(s + 1);
    if (auto d = stem.find_last_of('.'); d != std::string::npos) stem = stem.substr(0, d);
    return parse_magma_table(in, stem);
}

// Accepts "N:4", "D0", "S:3", "E:2", "BNC", "Z" or a path to a table file.
inline MagmaPtr parse_magma_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    if (head == "N" || head == "S" || head == "E") {
        if (colon == std::string::npos) throw std::invalid_argument(head + " needs a parameter, e.g. " + head + ":2");
        return builtin(head, std::stoi(spec.substr(colon + 1)));
    }
    if (spec == "D0" || spec == "BNC" || spec == "Z") return builtin(spec);
    return load_magma_file(spec);
}

} // namespace ncm

#endif // NCM_MAGMA_HPP
