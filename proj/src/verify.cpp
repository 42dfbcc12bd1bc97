#include "cliffbrack/verify.hpp"

#include "cliffbrack/error.hpp"
#include "cliffbrack/parser.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>

namespace cliffbrack {

bool SuiteReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
}

std::string SuiteReport::to_json() const {
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
        doc["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    doc["all_pass"] = all_pass();
    return doc.dump(2);
}

namespace {

VariableContext generic_ctx(int n, int total = -1) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        names.push_back("v" + std::to_string(i));
    VariableContext ctx = VariableContext::make(names);
    if (total > n)
        ctx.set_multiplicity(0, total - n + 1);
    return ctx;
}

SuiteCheck check_rules_sound(const std::string& name, const RuleSet& rs, const VariableContext& ctx,
                             int trials, unsigned long long seed) {
    for (const auto& r : rs.rules()) {
        Polynomial diff = Polynomial::word(r.lhs) - r.rhs;
        ZeroCheck z = check_zero(diff, ctx, trials, seed);
        if (!z.zero)
            return SuiteCheck{name, false, "rule " + r.family + " with leader " + print_word(r.lhs, ctx) +
                                               " is not in the ideal"};
    }
    return SuiteCheck{name, true, std::to_string(rs.size()) + " rules"};
}

// every multiplicity composition of m over n ordered variables
std::vector<std::vector<int>> compositions(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 1);
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (idx == n - 1) {
            cur[static_cast<std::size_t>(idx)] = left;
            out.push_back(cur);
            return;
        }
        for (int k = 1; left - k >= n - 1 - idx; ++k) {
            cur[static_cast<std::size_t>(idx)] = k;
            rec(idx + 1, left - k);
        }
    };
    if (m >= n)
        rec(0, m);
    return out;
}

} // namespace

SuiteReport verify_identities(int instances, unsigned long long seed) {
    SuiteReport rep;
    rep.suite = "identities";
    rep.seed = seed;
    rep.trials = instances;
    IdentityReport ir = check_basic_identities(instances, seed);
    for (const auto& c : ir.checks)
        rep.checks.push_back(SuiteCheck{c.name, c.pass, c.detail});
    return rep;
}

SuiteReport verify_gb(int trials, unsigned long long seed, int max_m) {
    SuiteReport rep;
    rep.suite = "gb";
    rep.seed = seed;
    rep.trials = trials;

    for (int n = 3; n <= 5; ++n) {
        auto ctx = generic_ctx(n);
        rep.checks.push_back(
            check_rules_sound("multilinear n=" + std::to_string(n), generate_multilinear(ctx), ctx, trials, seed));
    }
    for (int n = 2; n <= 4; ++n) {
        auto ctx = generic_ctx(n, 7); // windows up to degree 7
        rep.checks.push_back(
            check_rules_sound("general n=" + std::to_string(n), generate_general(ctx), ctx, trials, seed));
    }
    for (int n = 2; n <= 4; ++n) {
        auto ctx = generic_ctx(n, 7);
        rep.checks.push_back(
            check_rules_sound("squarefree n=" + std::to_string(n), generate_squarefree(ctx), ctx, trials, seed));
    }

    // BG[M]: every element lies in the uni-bracket syzygy ideal, i.e. its
    // expansion has exact-zero center at random assignments
    for (int m = 3; m <= max_m; ++m)
        for (int n = 2; n <= std::min(m, 4); ++n)
            for (const auto& mult : compositions(m, n)) {
                std::vector<std::string> names;
                for (int i = 1; i <= n; ++i)
                    names.push_back("v" + std::to_string(i));
                VariableContext ctx = VariableContext::make(names, mult);
                for (RFamilyVariant variant : {RFamilyVariant::Remark, RFamilyVariant::Theorem}) {
                    UniGroebnerBase base = generate_BG(ctx, variant);
                    bool ok = true;
                    std::string detail;
                    for (const auto& el : base.elements) {
                        Polynomial vv = expand_to_vv(el.element, true);
                        ZeroCheck z = check_center_zero(vv, ctx, trials, seed);
                        if (!z.zero) {
                            ok = false;
                            detail = el.family + " leader " + print_monomial(el.leader, ctx);
                            break;
                        }
                    }
                    std::string name = "BG " + print_header(ctx) +
                                       (variant == RFamilyVariant::Remark ? " remark" : " theorem");
                    rep.checks.push_back(SuiteCheck{
                        name, ok, ok ? std::to_string(base.elements.size()) + " elements" : detail});
                }
            }
    return rep;
}

SuiteReport verify_confluence(int general_degree, int multilinear_degree) {
    SuiteReport rep;
    rep.suite = "confluence";

    {
        auto ctx = generic_ctx(3, general_degree);
        RuleSet rs = generate_general(ctx);
        bool ok = true;
        std::string detail;
        int count = 0;
        std::function<void(Word&)> walk = [&](Word& w) {
            if (!ok)
                return;
            if (!w.empty()) {
                Monomial mono(w);
                ClosureResult res = brute_force_closure(mono, rs, ctx);
                Polynomial nf = reduce(Polynomial::monomial(mono), rs, ctx);
                ++count;
                if (!res.unique_fixed_point() || res.fixed_points[0] != nf) {
                    ok = false;
                    detail = "monomial " + print_monomial(mono, ctx) + ": " +
                             std::to_string(res.fixed_points.size()) + " fixed points";
                    return;
                }
            }
            if (static_cast<int>(w.size()) == general_degree)
                return;
            for (VarId v = 0; v < 3; ++v) {
                w.push_back(v);
                walk(w);
                w.pop_back();
            }
        };
        Word w;
        walk(w);
        rep.checks.push_back(SuiteCheck{"general ring n=3 degree<=" + std::to_string(general_degree), ok,
                                        ok ? std::to_string(count) + " monomials" : detail});
    }

    {
        auto ctx = generic_ctx(5);
        RuleSet rs = generate_multilinear(ctx);
        ClosureCaps caps;
        caps.max_alphabet = 5;
        bool ok = true;
        std::string detail;
        int count = 0;
        std::function<void(Word&)> walk = [&](Word& w) {
            if (!ok)
                return;
            if (!w.empty()) {
                Monomial mono(w);
                ClosureResult res = brute_force_closure(mono, rs, ctx, caps);
                Polynomial nf = reduce(Polynomial::monomial(mono), rs, ctx);
                ++count;
                if (!res.unique_fixed_point() || res.fixed_points[0] != nf) {
                    ok = false;
                    detail = "monomial " + print_monomial(mono, ctx) + ": " +
                             std::to_string(res.fixed_points.size()) + " fixed points";
                    return;
                }
            }
            if (static_cast<int>(w.size()) == multilinear_degree)
                return;
            for (VarId v = 0; v < 5; ++v) {
                if (std::find(w.begin(), w.end(), v) != w.end())
                    continue;
                w.push_back(v);
                walk(w);
                w.pop_back();
            }
        };
        Word w;
        walk(w);
        rep.checks.push_back(SuiteCheck{"multilinear n=5 degree<=" + std::to_string(multilinear_degree),
                                        ok, ok ? std::to_string(count) + " monomials" : detail});
    }
    return rep;
}

SuiteReport verify_dimension() {
    SuiteReport rep;
    rep.suite = "dimension";
    auto ctx = generic_ctx(3, 4);
    for (RingKind kind : {RingKind::Multilinear, RingKind::General, RingKind::SquareFree}) {
        for (int m = 0; m <= 4; ++m) {
            if (kind == RingKind::Multilinear && m > 3)
                continue;
            auto component = enumerate_component(m, kind, ctx);
            int shaped = 0;
            for (const auto& mono : component)
                if (is_normal_shape(mono, kind, ctx))
                    ++shaped;
            int dim = quotient_dimension(m, kind, ctx);
            std::string name = to_string(kind) + " n=3 m=" + std::to_string(m);
            bool ok = shaped == dim;
            rep.checks.push_back(SuiteCheck{name, ok,
                                            "shapes=" + std::to_string(shaped) +
                                                " dim=" + std::to_string(dim)});
        }
    }
    return rep;
}

SuiteReport verify_suite(const std::string& suite, int trials, unsigned long long seed) {
    if (suite == "identities")
        return verify_identities(std::max(1, trials), seed);
    if (suite == "gb")
        return verify_gb(std::max(1, trials), seed, 5);
    if (suite == "confluence")
        return verify_confluence(4, 4);
    if (suite == "dimension")
        return verify_dimension();
    throw DomainError("unknown suite " + suite);
}

} // namespace cliffbrack
