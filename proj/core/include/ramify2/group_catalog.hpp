#ifndef RAMIFY2_GROUP_CATALOG_HPP
#define RAMIFY2_GROUP_CATALOG_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ramify2/errors.hpp"

namespace ramify2 {

// Reference to a group: either another catalog record ("12T215") or a
// named abstract group from the built-in table ("S5").
struct group_ref {
    int degree = 0;  // 0 for named references
    int t_index = 0;
    std::string name;

    bool is_named() const { return degree == 0; }
    std::string format() const;
    bool operator==(const group_ref&) const = default;
    auto operator<=>(const group_ref&) const = default;
};

// One transitive permutation group, identified by degree and index in
// the standard transitive-groups numbering.  The quotient list records
// known quotient identities of the group: isomorphism classes of proper
// nontrivial quotients and, where the same abstract group occurs as
// another catalog record or as a named group, that identity itself.
// Lists are as complete as the elimination needs, not exhaustive.
struct transitive_group_record {
    int degree = 0;
    int t_index = 0;
    std::uint64_t order = 0;
    bool two_group = false;
    std::vector<group_ref> quotients;

    std::string label() const;  // "9T19"
};

enum class tri { unknown, yes, no };

// Abstract groups that appear as quotient targets.  faithful_degree is
// the smallest known degree <= 8 of a faithful transitive permutation
// action (0 when none exists); psl2_field is q for PSL(2,q), else 0.
struct named_group {
    std::string name;
    std::uint64_t order = 0;
    bool two_group = false;
    int psl2_field = 0;
    int faithful_degree = 0;
    tri two_generated_with_involution = tri::unknown;
};

// Prior-knowledge verdict on a single group, with no quotient chasing:
//   impossible - the group cannot be the Galois group of any field in
//                the family, by one of five established facts:
//                  1. no fields of degree 3, 5, 6 or 7 exist
//                  2. closures of fields of degree <= 8 are 2-groups
//                  3. groups of order < 272 are 2-groups
//                  4. PSL(2, 2^j), j >= 1, never occurs
//                  5. occurring 2-groups are generated by two elements
//                     one of which is an involution
//   unknown    - none of the facts applies
// Facts 1 and 2 need a faithful small-degree action, fact 4 a PSL
// identification and fact 5 a generation property, all of which live in
// the named-group table; a bare catalog record exposes its order and
// 2-group flag, so only fact 3 can fire on one.
enum class exclusion { impossible, unknown };

exclusion base_exclusion(const transitive_group_record& g);
exclusion base_exclusion(const named_group& g);

// Loads "T <degree> <index> <order> <2group:0|1> [q=<ref>(;<ref>)*]"
// lines; <ref> is <d>T<j> or name:<identifier> (names may contain
// commas, hence the semicolon separator).  Blank lines and '#'
// comments are skipped.  The loader validates internal consistency
// (well-formed lines, degree | order, 2-group flag matching the order,
// no duplicates, every reference resolving to a record or to the named
// table) but does not recompute any group theory.
class group_catalog {
  public:
    static group_catalog load(std::istream& in);
    static group_catalog load_file(const std::string& path);

    const std::vector<transitive_group_record>& records() const {
        return records_;
    }
    const transitive_group_record* find(int degree, int t_index) const;
    const transitive_group_record& at(int degree, int t_index) const;
    std::vector<int> degrees() const;
    int count(int degree) const;
    bool has_degree(int degree) const { return count(degree) > 0; }

    static const named_group* named(std::string_view name);

  private:
    std::vector<transitive_group_record> records_;                // sorted
    std::map<std::pair<int, int>, std::size_t> index_;
};

// verdict for a reference: named table or catalog record
exclusion base_exclusion(const group_ref& ref, const group_catalog& cat);

}  // namespace ramify2

#endif
