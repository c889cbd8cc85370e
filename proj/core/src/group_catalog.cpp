#include "ramify2/group_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ramify2/rational.hpp"

namespace ramify2 {

std::string group_ref::format() const {
    if (is_named()) return name;
    return std::to_string(degree) + "T" + std::to_string(t_index);
}

std::string transitive_group_record::label() const {
    return std::to_string(degree) + "T" + std::to_string(t_index);
}

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Abstract groups the catalog may cite as quotient identities.  Only
// facts the literature actually supplies are encoded: order, 2-group
// flag, a faithful transitive action of degree <= 8 when one is known,
// a PSL(2,q) identification, and the two-generation criterion verdict
// for 2-groups.
const std::vector<named_group>& named_table() {
    static const std::vector<named_group> table = {
        // name, order, 2-group, psl2 q, faithful degree <= 8, 2-gen w/ involution
        {"C2", 2, true, 0, 2, tri::yes},
        {"C3", 3, false, 0, 3, tri::unknown},
        {"C4", 4, true, 0, 4, tri::yes},
        {"V4", 4, true, 0, 4, tri::yes},
        {"C5", 5, false, 0, 5, tri::unknown},
        {"C6", 6, false, 0, 6, tri::unknown},
        {"S3", 6, false, 0, 3, tri::unknown},
        {"C7", 7, false, 0, 7, tri::unknown},
        {"C8", 8, true, 0, 8, tri::yes},
        {"D4", 8, true, 0, 4, tri::yes},
        {"Q8", 8, true, 0, 8, tri::no},
        {"D5", 10, false, 0, 5, tri::unknown},
        {"A4", 12, false, 0, 4, tri::unknown},
        {"D6", 12, false, 0, 6, tri::unknown},
        {"C14", 14, false, 0, 7, tri::unknown},
        {"D7", 14, false, 0, 7, tri::unknown},
        {"SD16", 16, true, 0, 8, tri::yes},
        {"C16", 16, true, 0, 0, tri::yes},
        {"F20", 20, false, 0, 5, tri::unknown},
        {"F21", 21, false, 0, 7, tri::unknown},
        {"S4", 24, false, 0, 4, tri::unknown},
        {"SL(2,3)", 24, false, 0, 8, tri::unknown},
        {"F42", 42, false, 0, 7, tri::unknown},
        {"GL(2,3)", 48, false, 0, 8, tri::unknown},
        {"A5", 60, false, 4, 5, tri::unknown},
        {"S3wrS2", 72, false, 0, 6, tri::unknown},
        {"S5", 120, false, 0, 5, tri::unknown},
        {"PSL(2,7)", 168, false, 7, 7, tri::unknown},
        {"A6", 360, false, 9, 6, tri::unknown},
        {"PSL(2,8)", 504, false, 8, 0, tri::unknown},
        {"S6", 720, false, 0, 6, tri::unknown},
        {"A7", 2520, false, 0, 7, tri::unknown},
        {"S7", 5040, false, 0, 7, tri::unknown},
    };
    return table;
}

}  // namespace

const named_group* group_catalog::named(std::string_view name) {
    for (const named_group& g : named_table()) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

exclusion base_exclusion(const transitive_group_record& g) {
    // a bare record only exposes order and the 2-group flag
    if (!g.two_group && g.order < 272) return exclusion::impossible;
    return exclusion::unknown;
}

exclusion base_exclusion(const named_group& g) {
    int fd = g.faithful_degree;
    if (fd == 3 || fd == 5 || fd == 6 || fd == 7) return exclusion::impossible;
    if (fd >= 1 && fd <= 8 && !g.two_group) return exclusion::impossible;
    if (!g.two_group && g.order < 272) return exclusion::impossible;
    if (g.psl2_field >= 2 && is_power_of_two(g.psl2_field))
        return exclusion::impossible;
    if (g.two_group && g.two_generated_with_involution == tri::no)
        return exclusion::impossible;
    return exclusion::unknown;
}

exclusion base_exclusion(const group_ref& ref, const group_catalog& cat) {
    if (ref.is_named()) {
        const named_group* g = group_catalog::named(ref.name);
        if (!g) throw catalog_error("unknown named group " + ref.name);
        return base_exclusion(*g);
    }
    return base_exclusion(cat.at(ref.degree, ref.t_index));
}

namespace {

group_ref parse_ref(const std::string& token, std::size_t lineno) {
    auto fail = [&](const std::string& why) -> group_ref {
        throw syntax_error("catalog line " + std::to_string(lineno) +
                               ": bad reference '" + token + "': " + why,
                           0);
    };
    if (token.rfind("name:", 0) == 0) {
        std::string name = token.substr(5);
        if (name.empty()) return fail("empty name");
        return group_ref{0, 0, name};
    }
    std::size_t t = token.find('T');
    if (t == std::string::npos || t == 0 || t + 1 == token.size())
        return fail("expected <d>T<j> or name:<identifier>");
    for (std::size_t i = 0; i < token.size(); ++i) {
        if (i == t) continue;
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            return fail("expected digits around 'T'");
    }
    int degree = std::stoi(token.substr(0, t));
    int index = std::stoi(token.substr(t + 1));
    if (degree < 1 || index < 1) return fail("degree and index must be positive");
    return group_ref{degree, index, ""};
}

}  // namespace

group_catalog group_catalog::load(std::istream& in) {
    group_catalog cat;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream words(line);
        std::string keyword;
        if (!(words >> keyword) || keyword[0] == '#') continue;
        if (keyword != "T")
            throw syntax_error(
                "catalog line " + std::to_string(lineno) + ": expected 'T'", 0);
        transitive_group_record rec;
        int flag = -1;
        if (!(words >> rec.degree >> rec.t_index >> rec.order >> flag))
            throw syntax_error("catalog line " + std::to_string(lineno) +
                                   ": expected 'T <degree> <index> <order> <0|1>'",
                               0);
        if (rec.degree < 1)
            throw catalog_error("catalog line " + std::to_string(lineno) +
                                ": degree must be positive");
        if (rec.t_index < 1)
            throw catalog_error("catalog line " + std::to_string(lineno) +
                                ": index must be positive");
        if (rec.order == 0 || rec.order % rec.degree != 0)
            throw catalog_error("catalog line " + std::to_string(lineno) +
                                ": order of a transitive group is a positive "
                                "multiple of its degree");
        if (flag != 0 && flag != 1)
            throw syntax_error("catalog line " + std::to_string(lineno) +
                                   ": 2-group flag must be 0 or 1",
                               0);
        rec.two_group = flag == 1;
        if (rec.two_group != is_power_of_two(rec.order))
            throw catalog_error("catalog line " + std::to_string(lineno) +
                                ": 2-group flag contradicts the order");
        std::string token;
        while (words >> token) {
            if (token.rfind("q=", 0) != 0)
                throw syntax_error("catalog line " + std::to_string(lineno) +
                                       ": unexpected token '" + token + "'",
                                   0);
            std::stringstream refs(token.substr(2));
            std::string one;
            while (std::getline(refs, one, ';')) {
                if (one.empty())
                    throw syntax_error("catalog line " + std::to_string(lineno) +
                                           ": empty reference",
                                       0);
                rec.quotients.push_back(parse_ref(one, lineno));
            }
        }
        cat.records_.push_back(std::move(rec));
    }

    std::sort(cat.records_.begin(), cat.records_.end(),
              [](const transitive_group_record& a,
                 const transitive_group_record& b) {
                  return std::make_pair(a.degree, a.t_index) <
                         std::make_pair(b.degree, b.t_index);
              });
    for (std::size_t i = 0; i < cat.records_.size(); ++i) {
        const transitive_group_record& rec = cat.records_[i];
        auto key = std::make_pair(rec.degree, rec.t_index);
        if (!cat.index_.emplace(key, i).second)
            throw catalog_error("duplicate record " + rec.label());
    }
    for (const transitive_group_record& rec : cat.records_) {
        for (const group_ref& ref : rec.quotients) {
            if (ref.is_named()) {
                if (!named(ref.name))
                    throw catalog_error(rec.label() +
                                        " references unknown named group " +
                                        ref.name);
            } else {
                if (ref.degree == rec.degree && ref.t_index == rec.t_index)
                    throw catalog_error(rec.label() + " references itself");
                if (!cat.find(ref.degree, ref.t_index))
                    throw catalog_error(rec.label() +
                                        " references missing record " +
                                        ref.format());
            }
        }
    }
    return cat;
}

group_catalog group_catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open catalog file " + path);
    return load(in);
}

const transitive_group_record* group_catalog::find(int degree,
                                                   int t_index) const {
    auto it = index_.find(std::make_pair(degree, t_index));
    if (it == index_.end()) return nullptr;
    return &records_[it->second];
}

const transitive_group_record& group_catalog::at(int degree,
                                                 int t_index) const {
    const transitive_group_record* rec = find(degree, t_index);
    if (!rec)
        throw catalog_error("no record " + std::to_string(degree) + "T" +
                            std::to_string(t_index));
    return *rec;
}

std::vector<int> group_catalog::degrees() const {
    std::vector<int> out;
    for (const transitive_group_record& rec : records_) {
        if (out.empty() || out.back() != rec.degree) out.push_back(rec.degree);
    }
    return out;
}

int group_catalog::count(int degree) const {
    auto lo = index_.lower_bound(std::make_pair(degree, 0));
    auto hi = index_.lower_bound(std::make_pair(degree + 1, 0));
    return static_cast<int>(std::distance(lo, hi));
}

}  // namespace ramify2
