#ifndef RAMIFY2_REF_TABLES_HPP
#define RAMIFY2_REF_TABLES_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ramify2/slope_content.hpp"

namespace ramify2 {

// Unconditional root-discriminant bound row: any Galois field whose
// 2-adic mean slope is at most gms2_bound has root discriminant below
// rd_display, which forces |G| < max_order once degree exceeds the
// table's reach.
struct rd_bound_entry {
    rational gms2_bound;
    std::string rd_display;  // decimal shown for context only, never computed with
    std::uint64_t max_order;
};

// eight rows, ascending in gms2_bound
const std::vector<rd_bound_entry>& rd_bound_table();

// Smallest max_order whose row strictly dominates the given mean slope.
// Throws no_bound_error when gms2 >= the last row's threshold.
std::uint64_t order_bound_for_gms(const rational& gms2);

// Worst-case octic slope contents, keyed by slope count or by structural
// constraint.
enum class octic_class {
    three_slopes,
    four_slopes,
    five_slopes,
    six_slopes,
    no_five,                      // contents avoiding slope 5
    no_seventeen_quarter_with_five,  // contents with slope 5 but not 17/4
};

std::string_view octic_class_tag(octic_class cls);

// Worst-case local slope contents per completion degree and class.  All
// caps are data: a cap_table starts from the built-in values and an
// override file can replace individual rows.
//
// Built-in rows (p = 2):
//   1,3,5,7 "tame"                    -> [ ]_d
//   2      "quadratic"                -> [3]_1
//   4      "quartic-2group"           -> [2,3,4]_1
//   4      "quartic-2group-2slopes"   -> [3,4]_1
//   4      "quartic-non-2group"       -> [8/3,8/3]_3
//   8      "octic-3-slopes"           -> [3,4,5]_1
//   8      "octic-4-slopes"           -> [2,3,4,5]_1
//   8      "octic-5-slopes"           -> [2,3,7/2,4,5]_1
//   8      "octic-6-slopes"           -> [2,3,7/2,4,17/4,5]_1
//   8      "octic-no-5"               -> [3,7/2,4,17/4,19/4]_1
//   8      "octic-no-17/4-with-5"     -> [2,3,7/2,4,5]_1
//
// Degree 6 has no row on purpose: sextic completions split into the
// twin cubic-quadratic cases and local_cap(6, ...) always throws
// twin_algebra_error.
class cap_table {
  public:
    cap_table();  // built-in rows

    // Override grammar, one directive per line:
    //   cap <degree> <class> <slope-content>
    // Blank lines and lines starting with '#' are skipped.  The degree
    // and class must name an existing row; the content must be valid
    // for p = 2.
    void load_overrides(std::istream& in);
    void load_overrides_file(const std::string& path);

    const slope_content& local_cap(int degree, std::string_view cls) const;
    const slope_content& octic(octic_class cls) const;

    static const cap_table& builtin();

  private:
    std::map<std::pair<int, std::string>, slope_content, std::less<>> rows_;
};

// lookups against the built-in table
const slope_content& local_cap(int degree, std::string_view cls);
const slope_content& octic_max_content(octic_class cls);

}  // namespace ramify2

#endif
