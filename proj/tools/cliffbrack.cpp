#include "cliffbrack/parser.hpp"
#include "cliffbrack/straighten.hpp"
#include "cliffbrack/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cliffbrack;

namespace {

struct Options {
    std::string expr;
    std::string input_path;
    std::string format = "text";
    std::string ring = "general";
    std::string layer = "vv";
    std::string variant = "remark";
    std::string vars;
    std::string partition;
    std::string suite = "identities";
    std::string expr_b;
    unsigned long long seed = 1;
    int trials = 20;
    long fuel = -1;
    bool trace = false;
};

std::string slurp(const Options& opt) {
    if (!opt.expr.empty())
        return opt.expr;
    if (!opt.input_path.empty() && opt.input_path != "-") {
        std::ifstream in(opt.input_path);
        if (!in)
            throw DomainError("cannot open " + opt.input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

ParseResult parse_input(const Options& opt) {
    ParseResult r = parse(slurp(opt));
    for (const auto& w : r.warnings)
        std::cerr << "warning: " << w << "\n";
    return r;
}

void emit(const BracketPolynomial& p, const VariableContext& ctx, const Options& opt) {
    if (opt.format == "json")
        std::cout << to_json(p, ctx) << "\n";
    else
        std::cout << print(p, ctx) << "\n";
}

void emit(const Polynomial& p, const VariableContext& ctx, const Options& opt) {
    emit(from_vv(p), ctx, opt);
}

RingKind ring_of(const Options& opt) {
    auto k = ring_kind_from_string(opt.ring);
    if (!k)
        throw DomainError("unknown ring kind " + opt.ring);
    return *k;
}

RFamilyVariant variant_of(const Options& opt) {
    if (opt.variant == "remark")
        return RFamilyVariant::Remark;
    if (opt.variant == "theorem")
        return RFamilyVariant::Theorem;
    throw DomainError("unknown R-family variant " + opt.variant);
}

VariableContext ctx_from_vars(const std::string& vars) {
    // accepts the header body: "v1<v2<v3" or "v1:2<v2"
    ParseResult r = parse("vars " + vars + "; 0");
    return r.ctx;
}

int run_fmt(const Options& opt) {
    ParseResult r = parse_input(opt);
    emit(r.poly, r.ctx, opt);
    return 0;
}

int run_normalize(const Options& opt) {
    ParseResult r = parse_input(opt);
    if (opt.layer == "vv") {
        RuleSet rs = generate_rules(ring_of(opt), r.ctx);
        Polynomial vv = expand_to_vv(r.poly, rs.kind == RingKind::SquareFree);
        emit(reduce(vv, rs, r.ctx, opt.fuel), r.ctx, opt);
        return 0;
    }
    if (opt.layer == "unibracket") {
        UniBracketPolynomial u = to_unibracket(r.poly, r.ctx);
        emit(unibracket_normal_form(u, r.ctx, variant_of(opt), opt.fuel).rep, r.ctx, opt);
        return 0;
    }
    throw DomainError("unknown layer " + opt.layer);
}

int run_straighten(const Options& opt) {
    ParseResult r = parse_input(opt);
    TraceSink sink;
    if (opt.trace)
        sink = [](const TraceStep& s) {
            std::cerr << "[" << s.rule << "] " << s.before << "  ->  " << s.after << "\n";
        };
    emit(straighten(r.poly, r.ctx, opt.fuel, sink), r.ctx, opt);
    return 0;
}

int run_expand(const Options& opt) {
    ParseResult r = parse_input(opt);
    std::vector<int> parts;
    if (!opt.partition.empty()) {
        std::stringstream ss(opt.partition);
        std::string item;
        while (std::getline(ss, item, ','))
            parts.push_back(std::stoi(item));
    }
    BracketPolynomial out;
    for (const auto& t : r.poly.sorted_terms_desc()) {
        if (!t.bare.empty() || t.factors.size() != 1)
            throw DomainError("expand takes single-bracket terms");
        BracketPolynomial e = parts.empty()
                                  ? caianiello_expand(t.factors[0], r.ctx)
                                  : caianiello_expand(t.factors[0], parts, r.ctx);
        e *= t.coeff;
        if (!t.squares.empty()) {
            BracketPolynomial shifted;
            for (const auto& [shape, c] : e.term_map()) {
                BracketTerm nt = shape;
                nt.coeff = c;
                for (const auto& [v, k] : t.squares)
                    nt.squares[v] += k;
                shifted.add(nt);
            }
            e = std::move(shifted);
        }
        out += e;
    }
    emit(out, r.ctx, opt);
    return 0;
}

int run_gb(const Options& opt) {
    if (opt.vars.empty())
        throw DomainError("gb requires --vars");
    VariableContext ctx = ctx_from_vars(opt.vars);
    if (opt.layer == "unibracket") {
        UniGroebnerBase base = generate_BG(ctx, variant_of(opt));
        if (opt.format == "json") {
            nlohmann::json doc;
            doc["vars"] = print_header(ctx);
            doc["vv_rules"] = base.vv_rules.size();
            doc["elements"] = nlohmann::json::array();
            for (const auto& el : base.elements)
                doc["elements"].push_back({{"family", el.family},
                                           {"element", print(el.element, ctx)},
                                           {"leader", print_monomial(el.leader, ctx)}});
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        std::cout << print_header(ctx) << "\n";
        for (const auto& r : base.vv_rules.rules())
            std::cout << r.family << ": " << print_word(r.lhs, ctx) << " -> " << print(r.rhs, ctx)
                      << "\n";
        for (const auto& el : base.elements)
            std::cout << el.family << ": " << print(el.element, ctx) << "\n";
        return 0;
    }
    RuleSet rs = generate_rules(ring_of(opt), ctx);
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["ring"] = to_string(rs.kind);
        doc["vars"] = print_header(ctx);
        doc["rules"] = nlohmann::json::array();
        for (const auto& r : rs.rules())
            doc["rules"].push_back({{"family", r.family},
                                    {"lhs", print_word(r.lhs, ctx)},
                                    {"rhs", print(r.rhs, ctx)}});
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << print_header(ctx) << "\n";
    for (const auto& r : rs.rules())
        std::cout << r.family << ": " << print_word(r.lhs, ctx) << " -> " << print(r.rhs, ctx) << "\n";
    return 0;
}

BracketPolynomial remap(const BracketPolynomial& p, const std::vector<VarId>& to) {
    BracketPolynomial out;
    for (const auto& [shape, c] : p.term_map()) {
        BracketTerm t = shape;
        t.coeff = c;
        for (VarId& v : t.bare)
            v = to[static_cast<std::size_t>(v)];
        for (auto& f : t.factors)
            for (VarId& v : f.entries)
                v = to[static_cast<std::size_t>(v)];
        SquarePart sq;
        for (const auto& [v, k] : t.squares)
            sq[to[static_cast<std::size_t>(v)]] += k;
        t.squares = std::move(sq);
        out.add(t);
    }
    return out;
}

// Union of two contexts; the declared orders must agree on shared names.
VariableContext merge_contexts(const VariableContext& a, const VariableContext& b) {
    std::vector<std::string> names = a.names();
    for (const auto& n : b.names())
        if (!a.has(n))
            names.push_back(n);
    for (int i = 0; i < b.alphabet_size(); ++i)
        for (int j = i + 1; j < b.alphabet_size(); ++j) {
            const std::string &x = b.names()[static_cast<std::size_t>(i)],
                              &y = b.names()[static_cast<std::size_t>(j)];
            if (a.has(x) && a.has(y) && !(a.rank(x) < a.rank(y)))
                throw DomainError("the two expressions declare conflicting variable orders");
        }
    VariableContext merged = VariableContext::make(names);
    for (int v = 0; v < merged.alphabet_size(); ++v) {
        const std::string& n = merged.names()[static_cast<std::size_t>(v)];
        int mult = 1;
        if (a.has(n))
            mult = std::max(mult, a.multiplicity(a.rank(n)));
        if (b.has(n))
            mult = std::max(mult, b.multiplicity(b.rank(n)));
        merged.set_multiplicity(v, mult);
    }
    return merged;
}

int run_check_equal(const Options& opt) {
    BracketPolynomial diff;
    VariableContext ctx;
    if (!opt.expr_b.empty()) {
        ParseResult a = parse(opt.expr);
        ParseResult b = parse(opt.expr_b);
        ctx = merge_contexts(a.ctx, b.ctx);
        std::vector<VarId> map_a, map_b;
        for (const auto& n : a.ctx.names())
            map_a.push_back(ctx.rank(n));
        for (const auto& n : b.ctx.names())
            map_b.push_back(ctx.rank(n));
        diff = remap(a.poly, map_a);
        diff -= remap(b.poly, map_b);
    } else {
        ParseResult r = parse_input(opt);
        ctx = r.ctx;
        diff = r.poly;
    }
    BracketPolynomial nf = straighten(diff, ctx, opt.fuel);
    std::cout << (nf.is_zero() ? "equal" : "not equal") << "\n";
    return 0;
}

int run_verify(const Options& opt) {
    SuiteReport rep = verify_suite(opt.suite, opt.trials, opt.seed);
    std::cout << rep.to_json() << "\n";
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"normalization of Clifford bracket polynomials"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* cmd, bool takes_expr = true) {
        if (takes_expr)
            cmd->add_option("expr", opt.expr, "expression (default: read stdin)");
        cmd->add_option("--input", opt.input_path, "input file, '-' for stdin");
        cmd->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--fuel", opt.fuel, "rewrite step budget");
    };

    auto* fmt = app.add_subcommand("fmt", "parse and reprint");
    add_io(fmt);

    auto* normalize = app.add_subcommand("normalize", "reduce to a normal form");
    add_io(normalize);
    normalize->add_option("--layer", opt.layer, "vv|unibracket")
        ->check(CLI::IsMember({"vv", "unibracket"}));
    normalize->add_option("--ring", opt.ring, "multilinear|general|squarefree");
    normalize->add_option("--variant", opt.variant, "remark|theorem");

    auto* straighten_cmd = app.add_subcommand("straighten", "lowest-leader (straight) normal form");
    add_io(straighten_cmd);
    straighten_cmd->add_flag("--trace", opt.trace, "emit the rewrite derivation on stderr");

    auto* expand = app.add_subcommand("expand", "Caianiello expansion of brackets");
    add_io(expand);
    expand->add_option("--partition", opt.partition, "comma-separated part lengths, e.g. 2,2,3");

    auto* gb = app.add_subcommand("gb", "print a Groebner base as rewrite rules");
    gb->add_option("--vars", opt.vars, "declared variables, e.g. v1<v2<v3 or a:2<b")->required();
    gb->add_option("--ring", opt.ring, "multilinear|general|squarefree");
    gb->add_option("--layer", opt.layer, "vv|unibracket");
    gb->add_option("--variant", opt.variant, "remark|theorem");
    gb->add_option("--format", opt.format, "text|json")->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check-equal", "straighten A - B and report equality");
    check->add_option("exprA", opt.expr, "first expression (or a difference)");
    check->add_option("exprB", opt.expr_b, "second expression");
    check->add_option("--input", opt.input_path, "input file with a difference expression");
    check->add_option("--fuel", opt.fuel, "rewrite step budget");

    auto* verify = app.add_subcommand("verify", "oracle verification suites");
    verify->add_option("--suite", opt.suite, "identities|gb|confluence|dimension")
        ->check(CLI::IsMember({"identities", "gb", "confluence", "dimension"}));
    verify->add_option("--seed", opt.seed, "PRNG seed");
    verify->add_option("--trials", opt.trials, "assignments / instances per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fmt->parsed())
            return run_fmt(opt);
        if (normalize->parsed())
            return run_normalize(opt);
        if (straighten_cmd->parsed())
            return run_straighten(opt);
        if (expand->parsed())
            return run_expand(opt);
        if (gb->parsed())
            return run_gb(opt);
        if (check->parsed())
            return run_check_equal(opt);
        if (verify->parsed())
            return run_verify(opt);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
