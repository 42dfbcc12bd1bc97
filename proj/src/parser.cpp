#include "cliffbrack/parser.hpp"

#include "cliffbrack/error.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <variant>

namespace cliffbrack {

namespace {

enum class Tok { Ident, Nat, LBracket, RBracket, Less, Semi, At, Caret, Slash, Plus, Minus, Colon, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            if (s_[i_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++i_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= s_.size()) {
            tok_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = s_[i_];
        auto single = [&](Tok k) {
            tok_ = {k, std::string(1, c), line_, col_};
            ++i_;
            ++col_;
        };
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Tok::Ident, s_.substr(i_, j - i_), line_, col_};
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
                ++j;
            tok_ = {Tok::Nat, s_.substr(i_, j - i_), line_, col_};
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        switch (c) {
        case '[': single(Tok::LBracket); return;
        case ']': single(Tok::RBracket); return;
        case '<': single(Tok::Less); return;
        case ';': single(Tok::Semi); return;
        case '@': single(Tok::At); return;
        case '^': single(Tok::Caret); return;
        case '/': single(Tok::Slash); return;
        case '+': single(Tok::Plus); return;
        case '-': single(Tok::Minus); return;
        case ':': single(Tok::Colon); return;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_{Tok::End, "", 1, 1};
};

struct RawBracket; // forward
using RawItem = std::variant<std::string, RawBracket>;
struct RawBracket {
    std::vector<RawItem> items;
};

struct RawTerm {
    Rational coeff = 1;
    std::vector<std::variant<std::string, RawBracket>> atoms;
    std::vector<std::pair<std::string, int>> squares; // name, exponent (even)
    int line = 1, col = 1;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ParseResult run() {
        parse_header();
        parse_body();
        build_context();
        ParseResult out;
        out.ctx = ctx_;
        for (const auto& t : terms_)
            out.poly += lower_term(t);
        out.warnings = warnings_;
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, lex_.peek().line, lex_.peek().col);
    }

    void expect(Tok k, const char* what) {
        if (lex_.peek().kind != k)
            fail(std::string("expected ") + what);
        lex_.take();
    }

    void parse_header() {
        if (lex_.peek().kind != Tok::Ident || lex_.peek().text != "vars")
            return;
        lex_.take();
        declared_ = true;
        for (;;) {
            if (lex_.peek().kind != Tok::Ident)
                fail("expected variable name");
            Token name = lex_.take();
            int mult = 0; // 0 = not stated
            if (lex_.peek().kind == Tok::Colon) {
                lex_.take();
                if (lex_.peek().kind != Tok::Nat)
                    fail("expected multiplicity");
                mult = std::stoi(lex_.take().text);
                if (mult < 1)
                    throw ParseError("multiplicity must be >= 1", name.line, name.col);
            }
            for (const auto& [n, m] : decls_)
                if (n == name.text)
                    throw ParseError("duplicate variable " + name.text, name.line, name.col);
            decls_.emplace_back(name.text, mult);
            if (lex_.peek().kind == Tok::Less) {
                lex_.take();
                continue;
            }
            expect(Tok::Semi, "';' after variable declaration");
            break;
        }
    }

    Rational parse_rational() {
        Token num = lex_.take();
        Integer n(num.text);
        if (lex_.peek().kind == Tok::Slash) {
            lex_.take();
            if (lex_.peek().kind != Tok::Nat)
                fail("expected denominator");
            Integer d(lex_.take().text);
            if (d == 0)
                throw ParseError("zero denominator", num.line, num.col);
            return Rational(n, d);
        }
        return Rational(n);
    }

    RawBracket parse_bracket() {
        expect(Tok::LBracket, "'['");
        RawBracket b;
        while (lex_.peek().kind != Tok::RBracket) {
            if (lex_.peek().kind == Tok::Ident) {
                b.items.emplace_back(lex_.take().text);
            } else if (lex_.peek().kind == Tok::LBracket) {
                b.items.emplace_back(parse_bracket());
            } else {
                fail("expected variable or '[' inside bracket");
            }
        }
        lex_.take();
        return b;
    }

    void parse_body() {
        bool negative = false;
        if (lex_.peek().kind == Tok::Plus)
            lex_.take();
        else if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            negative = true;
        }
        for (;;) {
            RawTerm t = parse_term();
            if (negative)
                t.coeff = -t.coeff;
            terms_.push_back(std::move(t));
            if (lex_.peek().kind == Tok::Plus) {
                lex_.take();
                negative = false;
                continue;
            }
            if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                negative = true;
                continue;
            }
            if (lex_.peek().kind == Tok::End)
                break;
            fail("expected '+', '-' or end of input");
        }
    }

    RawTerm parse_term() {
        RawTerm t;
        t.line = lex_.peek().line;
        t.col = lex_.peek().col;
        bool any = false;
        if (lex_.peek().kind == Tok::Nat) {
            t.coeff = parse_rational();
            any = true;
        }
        for (;;) {
            if (lex_.peek().kind == Tok::Ident) {
                t.atoms.emplace_back(lex_.take().text);
                any = true;
            } else if (lex_.peek().kind == Tok::LBracket) {
                t.atoms.emplace_back(parse_bracket());
                any = true;
            } else {
                break;
            }
        }
        if (lex_.peek().kind == Tok::At) {
            lex_.take();
            while (lex_.peek().kind == Tok::Ident) {
                Token name = lex_.take();
                expect(Tok::Caret, "'^' in square factor");
                if (lex_.peek().kind != Tok::Nat)
                    fail("expected square exponent");
                Token e = lex_.take();
                int exp = std::stoi(e.text);
                if (exp <= 0 || exp % 2 != 0)
                    throw ParseError("square exponent must be a positive even number", e.line, e.col);
                t.squares.emplace_back(name.text, exp);
                any = true;
            }
            if (t.squares.empty())
                fail("expected square factor after '@'");
        }
        if (!any)
            fail("expected a term");
        return t;
    }

    void note_usage(std::map<std::string, int>& usage, const std::string& name, int count) {
        usage[name] += count;
        if (declared_) {
            bool found = false;
            for (const auto& [n, m] : decls_)
                found = found || n == name;
            if (!found)
                throw ParseError("undeclared variable " + name, 1, 1);
        }
    }

    void collect_bracket(std::map<std::string, int>& usage, const RawBracket& b) {
        for (const auto& item : b.items) {
            if (std::holds_alternative<std::string>(item))
                note_usage(usage, std::get<std::string>(item), 1);
            else
                collect_bracket(usage, std::get<RawBracket>(item));
        }
    }

    void build_context() {
        std::map<std::string, int> peak; // max per-term usage
        for (const auto& t : terms_) {
            std::map<std::string, int> usage;
            for (const auto& a : t.atoms) {
                if (std::holds_alternative<std::string>(a))
                    note_usage(usage, std::get<std::string>(a), 1);
                else
                    collect_bracket(usage, std::get<RawBracket>(a));
            }
            for (const auto& [name, exp] : t.squares)
                note_usage(usage, name, exp);
            for (const auto& [name, count] : usage)
                peak[name] = std::max(peak[name], count);
        }
        std::vector<std::string> names;
        std::vector<int> mults;
        if (declared_) {
            for (const auto& [name, stated] : decls_) {
                int need = peak.count(name) ? peak.at(name) : 0;
                if (stated > 0 && need > stated)
                    throw ContextError("variable " + name + " used " + std::to_string(need) +
                                       " times but declared with multiplicity " + std::to_string(stated));
                names.push_back(name);
                mults.push_back(std::max(stated > 0 ? stated : 1, need));
            }
        } else {
            for (const auto& [name, count] : peak) { // std::map: lexicographic name order
                names.push_back(name);
                mults.push_back(std::max(1, count));
            }
        }
        ctx_ = VariableContext::make(std::move(names), std::move(mults));
    }

    /// Inner brackets expand by 2[F] = F + (-1)^f F-dagger inside the outer one.
    /// Returns the signed representatives of the flattened bracket.
    std::vector<std::pair<Rational, Word>> lower_bracket(const RawBracket& b) {
        std::vector<std::pair<Rational, Word>> contents{{1, {}}};
        for (const auto& item : b.items) {
            if (std::holds_alternative<std::string>(item)) {
                VarId v = ctx_.rank(std::get<std::string>(item));
                for (auto& [c, w] : contents)
                    w.push_back(v);
                continue;
            }
            // an inner bracket contributes its two expansion halves
            auto inner = lower_bracket(std::get<RawBracket>(item));
            std::vector<std::pair<Rational, Word>> next;
            for (const auto& [ic, f] : inner) {
                Rational half = ic / 2;
                Rational sign = (f.size() % 2 == 0) ? half : Rational(-half);
                for (const auto& [c, w] : contents) {
                    Word fwd = w;
                    fwd.insert(fwd.end(), f.begin(), f.end());
                    next.emplace_back(c * half, std::move(fwd));
                    Word bwd = w;
                    Word rev = reversion(f);
                    bwd.insert(bwd.end(), rev.begin(), rev.end());
                    next.emplace_back(c * sign, std::move(bwd));
                }
            }
            contents = std::move(next);
        }
        return contents;
    }

    BracketPolynomial lower_term(const RawTerm& raw) {
        BracketTerm base;
        base.coeff = raw.coeff;
        for (const auto& [name, exp] : raw.squares)
            base.squares[ctx_.rank(name)] += exp / 2;
        BracketPolynomial acc = BracketPolynomial::term(base);
        for (const auto& a : raw.atoms) {
            if (std::holds_alternative<std::string>(a)) {
                VarId v = ctx_.rank(std::get<std::string>(a));
                BracketPolynomial next;
                for (const auto& t : acc.sorted_terms_desc()) {
                    BracketTerm nt = t;
                    nt.bare.push_back(v);
                    next.add(nt);
                }
                acc = std::move(next);
                continue;
            }
            const RawBracket& rb = std::get<RawBracket>(a);
            auto lowered = lower_bracket(rb);
            BracketPolynomial next;
            for (const auto& t : acc.sorted_terms_desc()) {
                for (const auto& [bc, entries] : lowered) {
                    BracketTerm nt = t;
                    nt.coeff *= bc;
                    if (entries.size() == 1) {
                        warnings_.push_back("length-1 bracket [" + ctx_.name(entries[0]) +
                                            "] annihilates its term (line " + std::to_string(raw.line) + ")");
                        continue; // [v] = 0
                    }
                    if (!entries.empty())
                        nt.factors.emplace_back(entries);
                    next.add(nt);
                }
            }
            acc = std::move(next);
        }
        return acc;
    }

    Lexer lex_;
    bool declared_ = false;
    std::vector<std::pair<std::string, int>> decls_;
    std::vector<RawTerm> terms_;
    std::vector<std::string> warnings_;
    VariableContext ctx_;
};

} // namespace

ParseResult parse(const std::string& text) {
    return Parser(text).run();
}

std::string print_word(const Word& w, const VariableContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += ctx.name(w[i]);
    }
    return out;
}

namespace {

std::string print_squares(const SquarePart& s, const VariableContext& ctx) {
    std::string out = "@";
    for (const auto& [v, k] : s)
        out += " " + ctx.name(v) + "^" + std::to_string(2 * k);
    return out;
}

std::string print_term_body(const BracketTerm& t, const VariableContext& ctx) {
    std::vector<std::string> parts;
    for (VarId v : t.bare)
        parts.push_back(ctx.name(v));
    for (const auto& f : t.factors)
        parts.push_back("[" + print_word(f.entries, ctx) + "]");
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            body += ' ';
        body += parts[i];
    }
    if (!t.squares.empty()) {
        if (!body.empty())
            body += ' ';
        body += print_squares(t.squares, ctx);
    }
    return body;
}

std::string print_terms(const std::vector<BracketTerm>& terms, const VariableContext& ctx) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            out += neg ? "- " : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string body = print_term_body(t, ctx);
        if (body.empty())
            out += to_string(c);
        else if (c == 1)
            out += body;
        else
            out += to_string(c) + " " + body;
    }
    return out;
}

} // namespace

std::string print_monomial(const Monomial& m, const VariableContext& ctx) {
    BracketTerm t;
    t.bare = m.left;
    t.squares = m.squares;
    std::string body = print_term_body(t, ctx);
    return body.empty() ? "1" : body;
}

std::string print(const BracketPolynomial& p, const VariableContext& ctx) {
    return print_terms(p.sorted_terms_desc(), ctx);
}

std::string print(const Polynomial& p, const VariableContext& ctx) {
    return print(from_vv(p), ctx);
}

std::string print_header(const VariableContext& ctx) {
    std::string out = "vars ";
    for (int v = 0; v < ctx.alphabet_size(); ++v) {
        if (v)
            out += "<";
        out += ctx.name(v);
        if (ctx.multiplicity(v) > 1)
            out += ":" + std::to_string(ctx.multiplicity(v));
    }
    out += ";";
    return out;
}

namespace {

nlohmann::json json_of(const BracketPolynomial& p, const VariableContext& ctx) {
    nlohmann::json doc;
    doc["vars"] = nlohmann::json::array();
    for (int v = 0; v < ctx.alphabet_size(); ++v)
        doc["vars"].push_back({{"name", ctx.name(v)}, {"multiplicity", ctx.multiplicity(v)}});
    doc["terms"] = nlohmann::json::array();
    for (const auto& t : p.sorted_terms_desc()) {
        nlohmann::json jt;
        jt["coeff"] = to_string(t.coeff);
        jt["bare"] = nlohmann::json::array();
        for (VarId v : t.bare)
            jt["bare"].push_back(ctx.name(v));
        jt["brackets"] = nlohmann::json::array();
        for (const auto& f : t.factors) {
            nlohmann::json jf = nlohmann::json::array();
            for (VarId v : f.entries)
                jf.push_back(ctx.name(v));
            jt["brackets"].push_back(jf);
        }
        jt["squares"] = nlohmann::json::object();
        for (const auto& [v, k] : t.squares)
            jt["squares"][ctx.name(v)] = 2 * k;
        doc["terms"].push_back(jt);
    }
    return doc;
}

} // namespace

std::string to_json(const BracketPolynomial& p, const VariableContext& ctx) {
    return json_of(p, ctx).dump(2);
}

std::string to_json(const Polynomial& p, const VariableContext& ctx) {
    return to_json(from_vv(p), ctx);
}

} // namespace cliffbrack
