#include "ramify2/ref_tables.hpp"

#include <fstream>
#include <sstream>

#include "ramify2/errors.hpp"

namespace ramify2 {

const std::vector<rd_bound_entry>& rd_bound_table() {
    static const std::vector<rd_bound_entry> table = {
        {rational(4002, 1000), "16.032", 88},
        {rational(4066, 1000), "16.756", 110},
        {rational(4216, 1000), "18.597", 220},
        {rational(4231, 1000), "18.788", 240},
        {rational(4303, 1000), "19.742", 400},
        {rational(4428, 1000), "21.535", 2400},
        {rational(4449, 1000), "21.843", 4800},
        {rational(4460, 1000), "22.021", 8862},
    };
    return table;
}

std::uint64_t order_bound_for_gms(const rational& gms2) {
    for (const rd_bound_entry& row : rd_bound_table()) {
        if (gms2 < row.gms2_bound) return row.max_order;
    }
    throw no_bound_error("no discriminant bound strong enough for mean slope " +
                         format_rational(gms2));
}

std::string_view octic_class_tag(octic_class cls) {
    switch (cls) {
        case octic_class::three_slopes: return "octic-3-slopes";
        case octic_class::four_slopes: return "octic-4-slopes";
        case octic_class::five_slopes: return "octic-5-slopes";
        case octic_class::six_slopes: return "octic-6-slopes";
        case octic_class::no_five: return "octic-no-5";
        case octic_class::no_seventeen_quarter_with_five:
            return "octic-no-17/4-with-5";
    }
    throw domain_error("unknown octic class");
}

cap_table::cap_table() {
    auto add = [this](int degree, std::string cls, std::string_view text) {
        rows_.emplace(std::make_pair(degree, std::move(cls)),
                      slope_content::parse(text));
    };
    add(1, "tame", "[]_1");
    add(3, "tame", "[]_3");
    add(5, "tame", "[]_5");
    add(7, "tame", "[]_7");
    add(2, "quadratic", "[3]_1");
    add(4, "quartic-2group", "[2,3,4]_1");
    add(4, "quartic-2group-2slopes", "[3,4]_1");
    add(4, "quartic-non-2group", "[8/3,8/3]_3");
    add(8, "octic-3-slopes", "[3,4,5]_1");
    add(8, "octic-4-slopes", "[2,3,4,5]_1");
    add(8, "octic-5-slopes", "[2,3,7/2,4,5]_1");
    add(8, "octic-6-slopes", "[2,3,7/2,4,17/4,5]_1");
    add(8, "octic-no-5", "[3,7/2,4,17/4,19/4]_1");
    add(8, "octic-no-17/4-with-5", "[2,3,7/2,4,5]_1");
}

const cap_table& cap_table::builtin() {
    static const cap_table table;
    return table;
}

void cap_table::load_overrides(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream words(line);
        std::string keyword;
        if (!(words >> keyword) || keyword[0] == '#') continue;
        if (keyword != "cap")
            throw syntax_error("override line " + std::to_string(lineno) +
                                   ": expected 'cap'",
                               0);
        int degree = 0;
        std::string cls, text;
        if (!(words >> degree >> cls >> text))
            throw syntax_error("override line " + std::to_string(lineno) +
                                   ": expected 'cap <degree> <class> <content>'",
                               0);
        std::string rest;
        if (words >> rest)
            throw syntax_error("override line " + std::to_string(lineno) +
                                   ": trailing tokens",
                               0);
        auto it = rows_.find(std::make_pair(degree, cls));
        if (it == rows_.end())
            throw domain_error("override line " + std::to_string(lineno) +
                               ": no cap row for degree " +
                               std::to_string(degree) + " class " + cls);
        it->second = slope_content::parse(text);
    }
}

void cap_table::load_overrides_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open override file " + path);
    load_overrides(in);
}

const slope_content& cap_table::local_cap(int degree,
                                          std::string_view cls) const {
    if (degree == 6)
        throw twin_algebra_error(
            "degree-6 completions split into the twin cubic cases; no single "
            "cap is defined");
    auto it = rows_.find(std::make_pair(degree, std::string(cls)));
    if (it == rows_.end())
        throw domain_error("no cap for degree " + std::to_string(degree) +
                           " class " + std::string(cls));
    return it->second;
}

const slope_content& cap_table::octic(octic_class cls) const {
    return local_cap(8, octic_class_tag(cls));
}

const slope_content& local_cap(int degree, std::string_view cls) {
    return cap_table::builtin().local_cap(degree, cls);
}

const slope_content& octic_max_content(octic_class cls) {
    return cap_table::builtin().octic(cls);
}

}  // namespace ramify2
