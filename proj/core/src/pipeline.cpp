#include "ramify2/pipeline.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "ramify2/errors.hpp"
#include "ramify2/rational.hpp"

namespace ramify2 {

namespace {

rational q(long long num, long long den) { return rational(num) / den; }

bool low_range(int n) { return n <= 11; }

slope_content resolve_component(const cap_table& caps, int degree,
                                const std::string& cls) {
    // the quartic compositum is a bound on a compositum, not a single
    // field's cap, so it lives outside the cap table
    if (cls == "quartic-compositum") return quartic_compositum_cap();
    return caps.local_cap(degree, cls);
}

// left fold with optional wild budget, validating every step against the
// compositum multiplicity bounds
slope_content fold_contents(const std::vector<slope_content>& parts,
                            std::optional<int> max_wild) {
    if (parts.empty()) throw domain_error("nothing to compose");
    slope_content acc = parts.front();
    if (max_wild && static_cast<int>(acc.wild().size()) > *max_wild)
        throw infeasible_error("wild slope count " +
                               std::to_string(acc.wild().size()) +
                               " already exceeds budget " +
                               std::to_string(*max_wild));
    for (std::size_t i = 1; i < parts.size(); ++i) {
        slope_content next = max_wild ? cap_wild_count(acc, parts[i], *max_wild)
                                      : crude_compose(acc, parts[i]);
        if (!check_compositum_bounds(acc, parts[i], next))
            throw domain_error("composed content " + next.format() +
                               " violates the compositum bounds");
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

const std::vector<scenario>& scenario_set(int degree) {
    if (degree < 9 || degree > 15)
        throw domain_error("degree " + std::to_string(degree) +
                           " outside the supported range 9..15");
    static const std::vector<scenario> low = {
        {"octic-4-slopes + cubic",
         {{8, "octic-4-slopes"}, {3, "tame"}},
         std::nullopt, q(97, 24), std::nullopt},
        {"octic-5-slopes + cubic",
         {{8, "octic-5-slopes"}, {3, "tame"}},
         std::nullopt, q(101, 24), std::nullopt},
        {"octic-6-slopes + cubic",
         {{8, "octic-6-slopes"}, {3, "tame"}},
         std::nullopt, q(53, 12), std::nullopt},
        {"octic-6-slopes + quadratic",
         {{8, "octic-6-slopes"}, {2, "quadratic"}},
         std::nullopt, q(71, 16), std::nullopt},
    };
    static const std::vector<scenario> high = {
        {"octic-3-slopes + quartic-2group-2slopes + cubic, wild <= 4",
         {{8, "octic-3-slopes"}, {4, "quartic-2group-2slopes"}, {3, "tame"}},
         4, q(203, 48), std::nullopt},
        {"octic-3-slopes + quartic-2group-2slopes + cubic",
         {{8, "octic-3-slopes"}, {4, "quartic-2group-2slopes"}, {3, "tame"}},
         std::nullopt, q(413, 96), std::nullopt},
        {"octic-6-slopes + septic",
         {{8, "octic-6-slopes"}, {7, "tame"}},
         std::nullopt, q(495, 112), std::nullopt},
        {"octic-no-5 + quartic-2group + quadratic",
         {{8, "octic-no-5"}, {4, "quartic-2group"}, {2, "quadratic"}},
         std::nullopt, q(561, 128), q(421, 96)},
        {"octic-no-17/4-with-5 + quartic-2group + quadratic",
         {{8, "octic-no-17/4-with-5"}, {4, "quartic-2group"}, {2, "quadratic"}},
         std::nullopt, q(1125, 256), std::nullopt},
        {"octic-6-slopes + quartic-compositum + cubic, wild <= 8",
         {{8, "octic-6-slopes"}, {4, "quartic-compositum"}, {3, "tame"}},
         8, q(427, 96), std::nullopt},
        {"octic-6-slopes + quartic-non-2group + quadratic",
         {{8, "octic-6-slopes"}, {4, "quartic-non-2group"}, {2, "quadratic"}},
         std::nullopt, q(107, 24), std::nullopt},
    };
    return low_range(degree) ? low : high;
}

namespace {

constexpr std::array<std::pair<const char*, int>, 4> bucket_defs = {{
    {"m<=4", 4},
    {"m<=5", 5},
    {"m<=6", 6},
    {"any", std::numeric_limits<int>::max()},
}};

struct bucket_acc {
    bool set = false;
    rational value;
    slope_content content;
    std::string witness;

    void offer(const rational& v, const slope_content& c,
               const std::string& w) {
        if (!set || v > value) {
            set = true;
            value = v;
            content = c;
            witness = w;
        }
    }
};

caps_result finish(int degree, caps_mode mode,
                   std::array<bucket_acc, 4>& accs) {
    caps_result r;
    r.degree = degree;
    r.mode = mode;
    for (std::size_t i = 0; i < accs.size(); ++i) {
        if (!accs[i].set)
            throw domain_error(std::string("no admissible content for bucket ") +
                               bucket_defs[i].first);
        r.buckets.push_back(cap_entry{bucket_defs[i].first, accs[i].value,
                                      accs[i].content, accs[i].witness});
    }
    return r;
}

caps_result run_curated(int n, const cap_table& caps) {
    std::array<bucket_acc, 4> accs;
    std::vector<value_flag> flags;
    for (const scenario& s : scenario_set(n)) {
        std::vector<slope_content> parts;
        for (const scenario_component& c : s.components)
            parts.push_back(resolve_component(caps, c.degree, c.cap_class));
        slope_content composed = fold_contents(parts, s.max_wild);
        rational v = composed.gms();
        int m = static_cast<int>(composed.wild().size());
        for (std::size_t i = 0; i < accs.size(); ++i)
            if (m <= bucket_defs[i].second) accs[i].offer(v, composed, s.label);
        if (s.published && *s.published != v)
            flags.push_back(value_flag{s.label, v, *s.published});
    }
    caps_result r = finish(n, caps_mode::paper, accs);
    r.flags = std::move(flags);
    return r;
}

// ------------------------------------------------------------------
// exhaustive mode: every multiset of local caps over the degree budget

struct part_choice {
    int degree;
    std::string cls;
};

// Classes the enumeration draws from.  Every octic factor has 3 to 6
// wild slopes and is capped by the row for its count; the constrained
// octic variants refine specific curated scenarios and are not separate
// enumeration classes.
const std::vector<std::string>& classes_for(int degree) {
    static const std::vector<std::string> quadratic = {"quadratic"};
    static const std::vector<std::string> tame = {"tame"};
    static const std::vector<std::string> quartic = {
        "quartic-2group", "quartic-2group-2slopes", "quartic-non-2group"};
    static const std::vector<std::string> octic = {
        "octic-3-slopes", "octic-4-slopes", "octic-5-slopes",
        "octic-6-slopes"};
    switch (degree) {
        case 2: return quadratic;
        case 3: case 5: case 7: return tame;
        case 4: return quartic;
        case 8: return octic;
    }
    throw domain_error("no local cap classes for degree " +
                       std::to_string(degree));
}

std::string part_label(const part_choice& p) {
    if (p.cls == "tame") {
        switch (p.degree) {
            case 3: return "cubic";
            case 5: return "quintic";
            case 7: return "septic";
        }
    }
    return p.cls;
}

// class assignments for k parts of one degree, as multisets
void class_multisets(const std::vector<std::string>& classes, int k, int start,
                     std::vector<std::string>& cur,
                     std::vector<std::vector<std::string>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < static_cast<int>(classes.size()); ++i) {
        cur.push_back(classes[i]);
        class_multisets(classes, k - 1, i, cur, out);
        cur.pop_back();
    }
}

void expand_classes(const std::vector<std::pair<int, int>>& degree_counts,
                    std::size_t idx, std::vector<part_choice>& cur,
                    std::vector<std::vector<part_choice>>& out) {
    if (idx == degree_counts.size()) {
        if (!cur.empty()) out.push_back(cur);
        return;
    }
    auto [degree, count] = degree_counts[idx];
    std::vector<std::vector<std::string>> assignments;
    std::vector<std::string> scratch;
    class_multisets(classes_for(degree), count, 0, scratch, assignments);
    for (const auto& classes : assignments) {
        for (const std::string& cls : classes)
            cur.push_back(part_choice{degree, cls});
        expand_classes(degree_counts, idx + 1, cur, out);
        cur.resize(cur.size() - classes.size());
    }
}

// degree multisets: parts from {8,7,5,4,3,2}, total <= budget, at most
// one octic part (larger 2-power blocks have no cap of their own)
std::vector<std::vector<part_choice>> enumerate_partitions(int budget) {
    static constexpr std::array<int, 6> degrees = {8, 7, 5, 4, 3, 2};
    std::vector<std::vector<part_choice>> out;
    std::vector<std::pair<int, int>> counts;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx == degrees.size()) {
            std::vector<part_choice> scratch;
            expand_classes(counts, 0, scratch, out);
            return;
        }
        int d = degrees[idx];
        int most = remaining / d;
        if (d == 8) most = std::min(most, 1);
        for (int c = 0; c <= most; ++c) {
            if (c > 0) counts.emplace_back(d, c);
            self(self, idx + 1, remaining - c * d);
            if (c > 0) counts.pop_back();
        }
    };
    rec(rec, 0, budget);
    return out;
}

bool collapses(const part_choice& p) {
    return p.cls == "quadratic" || p.cls.rfind("quartic-2group", 0) == 0;
}

// composes an octic cap with the quartic compositum, discounting every
// wild slope the two provably share
slope_content floor_compose(const slope_content& octic,
                            const slope_content& compositum) {
    int shared = 0;
    std::vector<rational> seen;
    for (const rational& s : octic.wild()) {
        if (std::find(seen.begin(), seen.end(), s) != seen.end()) continue;
        seen.push_back(s);
        shared += std::min(octic.multiplicity(s).equal,
                           compositum.multiplicity(s).equal);
    }
    int crude = static_cast<int>(octic.wild().size() +
                                 compositum.wild().size());
    return cap_wild_count(octic, compositum, crude - shared);
}

caps_result run_exhaustive(int n, const cap_table& caps) {
    int budget = low_range(n) ? 11 : 15;
    std::array<bucket_acc, 4> accs;
    for (const std::vector<part_choice>& parts : enumerate_partitions(budget)) {
        std::vector<slope_content> contents;
        std::string label;
        for (const part_choice& p : parts) {
            contents.push_back(resolve_component(caps, p.degree, p.cls));
            if (!label.empty()) label += " + ";
            label += part_label(p);
        }

        // wild-budget buckets: budgeted fold, octic first then by
        // descending degree (enumeration order)
        for (std::size_t i = 0; i + 1 < accs.size(); ++i) {
            try {
                slope_content c = fold_contents(contents, bucket_defs[i].second);
                accs[i].offer(c.gms(), c, label);
            } catch (const infeasible_error&) {
                // budget cannot be met for this multiset
            }
        }

        // unrestricted bucket: 2-group quartics force the collapse to the
        // quartic compositum, as does a second quadratic
        std::vector<part_choice> reduced;
        int two_group_quartics = 0, quadratics = 0;
        for (const part_choice& p : parts) {
            if (p.cls == "quadratic") ++quadratics;
            if (p.cls.rfind("quartic-2group", 0) == 0) ++two_group_quartics;
        }
        bool collapse = two_group_quartics >= 1 || quadratics >= 2;
        for (const part_choice& p : parts)
            if (!collapse || !collapses(p)) reduced.push_back(p);
        if (collapse) {
            auto at = std::find_if(reduced.begin(), reduced.end(),
                                   [](const part_choice& p) {
                                       return p.degree < 8;
                                   });
            reduced.insert(at, part_choice{4, "quartic-compositum"});
        }

        std::vector<slope_content> final_parts;
        std::string any_label;
        std::size_t start = 0;
        if (reduced.size() >= 2 && reduced[0].degree == 8 &&
            reduced[1].cls == "quartic-compositum") {
            final_parts.push_back(
                floor_compose(resolve_component(caps, 8, reduced[0].cls),
                              quartic_compositum_cap()));
            any_label = part_label(reduced[0]) + " + " + part_label(reduced[1]);
            start = 2;
        }
        for (std::size_t i = start; i < reduced.size(); ++i) {
            final_parts.push_back(
                resolve_component(caps, reduced[i].degree, reduced[i].cls));
            if (!any_label.empty()) any_label += " + ";
            any_label += part_label(reduced[i]);
        }
        slope_content c = fold_contents(final_parts, std::nullopt);
        accs[3].offer(c.gms(), c, any_label);
    }
    return finish(n, caps_mode::exhaustive, accs);
}

}  // namespace

caps_result gms_caps_for_degree(int n, caps_mode mode, const cap_table& caps) {
    if (n < 9 || n > 15)
        throw domain_error("degree " + std::to_string(n) +
                           " outside the supported range 9..15");
    caps_result curated = run_curated(n, caps);
    if (mode == caps_mode::paper) return curated;
    caps_result r = run_exhaustive(n, caps);
    r.flags = curated.flags;
    for (std::size_t i = 0; i < r.buckets.size(); ++i) {
        if (r.buckets[i].value != curated.buckets[i].value)
            r.divergences.push_back(cap_divergence{r.buckets[i].bucket,
                                                   curated.buckets[i].value,
                                                   r.buckets[i].value});
    }
    return r;
}

std::map<int, std::uint64_t> order_bounds_for_degree(int n,
                                                     const cap_table& caps) {
    caps_result r = gms_caps_for_degree(n, caps_mode::paper, caps);
    std::map<int, std::uint64_t> out;
    for (std::size_t i = 0; i < r.buckets.size(); ++i) {
        int key = bucket_defs[i].second;
        if (key == std::numeric_limits<int>::max()) key = 0;
        out[key] = order_bound_for_gms(r.buckets[i].value);
    }
    return out;
}

// ---------------------------------------------------------------------
// elimination

std::string_view elim_stage_name(elim_stage s) {
    switch (s) {
        case elim_stage::divisibility: return "divisibility";
        case elim_stage::general_bound: return "general-bound";
        case elim_stage::quotient: return "quotient";
        case elim_stage::refined_bound: return "refined-bound";
        case elim_stage::survivor: return "survivor";
    }
    throw domain_error("bad elimination stage");
}

std::string elimination_verdict::label() const {
    return std::to_string(degree) + "T" + std::to_string(t_index);
}

std::vector<const elimination_verdict*> elimination_trace::at_stage(
    elim_stage s) const {
    std::vector<const elimination_verdict*> out;
    for (const elimination_verdict& v : verdicts)
        if (v.stage == s) out.push_back(&v);
    return out;
}

bool elimination_trace::has_survivors() const {
    return !at_stage(elim_stage::survivor).empty();
}

namespace {

using pool_set = std::set<std::pair<int, int>>;

elimination_trace eliminate_one(int degree, const group_catalog& catalog,
                                const cap_table& caps, pool_set& pool) {
    if (!catalog.has_degree(degree))
        throw catalog_error("catalog has no degree-" + std::to_string(degree) +
                            " records");
    auto bounds = order_bounds_for_degree(degree, caps);
    std::uint64_t general = bounds.at(0);

    elimination_trace trace;
    trace.degree = degree;
    std::vector<const transitive_group_record*> recs;
    for (const transitive_group_record& r : catalog.records())
        if (r.degree == degree) recs.push_back(&r);

    for (const transitive_group_record* r : recs) {
        elimination_verdict v;
        v.degree = r->degree;
        v.t_index = r->t_index;
        v.order = r->order;
        if (r->order % 16 != 0) {
            v.stage = elim_stage::divisibility;
            v.detail = "16 does not divide order " + std::to_string(r->order);
        } else if (r->order >= general) {
            v.stage = elim_stage::general_bound;
            v.detail = "order " + std::to_string(r->order) +
                       " >= general bound " + std::to_string(general);
        }
        trace.verdicts.push_back(std::move(v));
    }

    auto locally_dead = [&](int d, int t) {
        if (d != degree) return false;
        for (const elimination_verdict& v : trace.verdicts)
            if (v.t_index == t) return v.stage != elim_stage::survivor;
        return false;
    };

    // quotient stage, iterated to a fixed point so same-degree chains
    // resolve regardless of index order
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < recs.size(); ++i) {
            elimination_verdict& v = trace.verdicts[i];
            if (v.stage != elim_stage::survivor) continue;
            for (const group_ref& ref : recs[i]->quotients) {
                std::string reason;
                if (!ref.is_named() &&
                    (pool.count({ref.degree, ref.t_index}) ||
                     locally_dead(ref.degree, ref.t_index))) {
                    reason = "quotient " + ref.format() + " eliminated";
                } else if (base_exclusion(ref, catalog) ==
                           exclusion::impossible) {
                    reason = "quotient " + ref.format() + " excluded";
                }
                if (!reason.empty()) {
                    v.stage = elim_stage::quotient;
                    v.detail = std::move(reason);
                    changed = true;
                    break;
                }
            }
        }
    }

    for (elimination_verdict& v : trace.verdicts) {
        if (v.stage != elim_stage::survivor) continue;
        int m = ord2(v.order);
        auto it = bounds.find(m);
        if (it != bounds.end() && v.order >= it->second) {
            v.stage = elim_stage::refined_bound;
            v.detail = "ord2 = " + std::to_string(m) + ", order " +
                       std::to_string(v.order) + " >= " +
                       std::to_string(it->second);
        }
    }

    for (const elimination_verdict& v : trace.verdicts)
        if (v.stage != elim_stage::survivor)
            pool.insert({v.degree, v.t_index});
    return trace;
}

}  // namespace

elimination_trace eliminate(int degree, const group_catalog& catalog,
                            const cap_table& caps) {
    if (degree < 9 || degree > 15)
        throw domain_error("degree " + std::to_string(degree) +
                           " outside the supported range 9..15");
    pool_set pool;
    elimination_trace trace;
    for (int d = 9; d <= degree; ++d)
        trace = eliminate_one(d, catalog, caps, pool);
    return trace;
}

run_report report(const group_catalog& catalog, const cap_table& caps) {
    run_report out;
    pool_set pool;
    for (int d = 9; d <= 15; ++d)
        out.degrees.push_back(eliminate_one(d, catalog, caps, pool));
    out.theorem_reproduced = true;
    for (const elimination_trace& t : out.degrees)
        if (t.has_survivors()) out.theorem_reproduced = false;

    struct target {
        const char* name;
        int degree;
        std::uint64_t order;
    };
    static constexpr std::array<target, 10> targets = {{
        {"A9", 9, 181440ULL},
        {"A10", 10, 1814400ULL},
        {"A11", 11, 19958400ULL},
        {"A12", 12, 239500800ULL},
        {"A13", 13, 3113510400ULL},
        {"A14", 14, 43589145600ULL},
        {"A15", 15, 653837184000ULL},
        {"M11", 11, 7920ULL},
        {"M12", 12, 95040ULL},
        {"PSL(3,3)", 13, 5616ULL},
    }};
    for (const target& t : targets) {
        const transitive_group_record* found = nullptr;
        for (const transitive_group_record& r : catalog.records()) {
            if (r.degree != t.degree || r.order != t.order) continue;
            if (found)
                throw catalog_error(std::string("ambiguous order ") +
                                    std::to_string(t.order) + " for " + t.name);
            found = &r;
        }
        if (!found)
            throw catalog_error(std::string("no degree-") +
                                std::to_string(t.degree) + " record of order " +
                                std::to_string(t.order) + " for " + t.name);
        const elimination_trace& tr = out.degrees[t.degree - 9];
        const elimination_verdict* verdict = nullptr;
        for (const elimination_verdict& v : tr.verdicts)
            if (v.t_index == found->t_index) verdict = &v;
        simple_group_row row;
        row.name = t.name;
        row.degree = t.degree;
        row.t_index = found->t_index;
        row.order = t.order;
        row.stage = verdict->stage;
        row.detail = verdict->detail;
        out.simple_groups.push_back(std::move(row));
    }
    return out;
}

// ---------------------------------------------------------------------
// JSON

namespace {

nlohmann::json bucket_json(const cap_entry& e) {
    return {{"bucket", e.bucket},
            {"value", format_rational(e.value)},
            {"content", e.content.format()},
            {"witness", e.witness}};
}

nlohmann::json trace_json(const elimination_trace& t) {
    nlohmann::json verdicts = nlohmann::json::array();
    nlohmann::json survivors = nlohmann::json::array();
    for (const elimination_verdict& v : t.verdicts) {
        verdicts.push_back({{"group", v.label()},
                            {"order", v.order},
                            {"stage", std::string(elim_stage_name(v.stage))},
                            {"detail", v.detail}});
        if (v.stage == elim_stage::survivor) survivors.push_back(v.label());
    }
    return {{"degree", t.degree},
            {"verdicts", verdicts},
            {"survivors", survivors}};
}

}  // namespace

std::string to_json(const caps_result& r) {
    nlohmann::json j;
    j["degree"] = r.degree;
    j["mode"] = r.mode == caps_mode::paper ? "paper" : "exhaustive";
    j["buckets"] = nlohmann::json::array();
    for (const cap_entry& e : r.buckets) j["buckets"].push_back(bucket_json(e));
    j["divergences"] = nlohmann::json::array();
    for (const cap_divergence& d : r.divergences)
        j["divergences"].push_back({{"bucket", d.bucket},
                                    {"curated", format_rational(d.curated)},
                                    {"exhaustive", format_rational(d.exhaustive)}});
    j["flags"] = nlohmann::json::array();
    for (const value_flag& f : r.flags)
        j["flags"].push_back({{"scenario", f.scenario},
                              {"computed", format_rational(f.computed)},
                              {"published", format_rational(f.published)}});
    return j.dump(2);
}

std::string to_json(const elimination_trace& t) { return trace_json(t).dump(2); }

std::string to_json(const run_report& r) {
    nlohmann::json j;
    j["degrees"] = nlohmann::json::array();
    for (const elimination_trace& t : r.degrees)
        j["degrees"].push_back(trace_json(t));
    j["theorem_reproduced"] = r.theorem_reproduced;
    j["simple_groups"] = nlohmann::json::array();
    for (const simple_group_row& s : r.simple_groups)
        j["simple_groups"].push_back(
            {{"name", s.name},
             {"group", std::to_string(s.degree) + "T" + std::to_string(s.t_index)},
             {"order", s.order},
             {"stage", std::string(elim_stage_name(s.stage))},
             {"detail", s.detail}});
    return j.dump(2);
}

}  // namespace ramify2
