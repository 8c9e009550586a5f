#include "ncs/exprio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "ncs/errors.hpp"

namespace ncs {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, lbracket, rbracket, comma, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::end, "", start};
            return;
        }
        char c = src_[i_];
        auto single = [&](Tok k) {
            ++i_;
            tok_ = {k, std::string(1, c), start};
        };
        switch (c) {
            case '+': return single(Tok::plus);
            case '-': return single(Tok::minus);
            case '*': return single(Tok::star);
            case '/': return single(Tok::slash);
            case '^': return single(Tok::caret);
            case '(': return single(Tok::lparen);
            case ')': return single(Tok::rparen);
            case '[': return single(Tok::lbracket);
            case ']': return single(Tok::rbracket);
            case ',': return single(Tok::comma);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) num += src_[i_++];
            tok_ = {Tok::number, num, start};
            return;
        }
        std::string ident;
        bool consumed = true;
        while (consumed && i_ < src_.size()) {
            unsigned char u = static_cast<unsigned char>(src_[i_]);
            if (std::isalnum(u) || u == '_') {
                ident += src_[i_++];
            } else if (u == 0xCE && i_ + 1 < src_.size()) {
                // Greek input aliases: xi, eta, zeta.
                unsigned char v = static_cast<unsigned char>(src_[i_ + 1]);
                if (v == 0xBE) ident += "xi";
                else if (v == 0xB7) ident += "eta";
                else if (v == 0xB6) ident += "zeta";
                else consumed = false;
                if (consumed) i_ += 2;
            } else {
                consumed = false;
            }
        }
        if (ident.empty()) throw parse_error("unexpected character '" + std::string(1, c) + "'", start);
        tok_ = {Tok::ident, ident, start};
    }

    const std::string& src_;
    std::size_t i_ = 0;
    Token tok_{Tok::end, "", 0};
};

// Parses into free polynomials; `pres` may be null for scalar-only contexts.
class Parser {
public:
    Parser(const std::string& src, const Presentation* pres) : lex_(src), pres_(pres) {}

    NCPoly parse_expr() {
        NCPoly value = parse_term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Tok op = lex_.take().kind;
            NCPoly rhs = parse_term();
            value = op == Tok::plus ? value + rhs : value - rhs;
        }
        return value;
    }

    void expect_end() {
        if (lex_.peek().kind != Tok::end)
            throw parse_error("trailing input after expression", lex_.peek().pos);
    }

    Token expect(Tok kind, const std::string& what) {
        if (lex_.peek().kind != kind) throw parse_error("expected " + what, lex_.peek().pos);
        return lex_.take();
    }

    const Token& peek() const { return lex_.peek(); }
    Token take() { return lex_.take(); }

private:
    NCPoly parse_term() {
        NCPoly value = parse_factor();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            Token op = lex_.take();
            NCPoly rhs = parse_factor();
            if (op.kind == Tok::star) {
                value = value * rhs;
            } else {
                if (!rhs.is_scalar())
                    throw parse_error("division requires a scalar divisor", op.pos);
                ParamScalar d = rhs.scalar_value();
                if (d.is_zero()) throw parse_error("division by zero", op.pos);
                value = value.scaled(d.inv());
            }
        }
        return value;
    }

    NCPoly parse_factor() {
        NCPoly base = parse_atom();
        if (lex_.peek().kind != Tok::caret) return base;
        Token caret = lex_.take();
        bool negative = false;
        if (lex_.peek().kind == Tok::minus) {
            negative = true;
            lex_.take();
        }
        Token num = expect(Tok::number, "integer exponent");
        int e = 0;
        try {
            e = std::stoi(num.text);
        } catch (const std::exception&) {
            throw parse_error("exponent out of range", num.pos);
        }
        if (negative) {
            if (!base.is_scalar())
                throw parse_error("negative power of a non-scalar (generators are not invertible)",
                                  caret.pos);
            ParamScalar b = base.scalar_value();
            if (b.is_zero()) throw parse_error("negative power of zero", caret.pos);
            return NCPoly::unit(b.inv().pow(e));
        }
        NCPoly r = NCPoly::one();
        for (int i = 0; i < e; ++i) r = r * base;
        return r;
    }

    NCPoly parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::number:
                return NCPoly::unit(ParamScalar::of(Rational(Integer(t.text))));
            case Tok::minus:
                return -parse_atom();
            case Tok::lparen: {
                NCPoly inner = parse_expr();
                expect(Tok::rparen, "')'");
                return inner;
            }
            case Tok::ident: {
                if (t.text == "q") return NCPoly::unit(ParamScalar::var(Param::q));
                if (t.text == "p") return NCPoly::unit(ParamScalar::var(Param::p));
                if (t.text == "s") return NCPoly::unit(ParamScalar::var(Param::s));
                if (!pres_) throw parse_error("unknown symbol '" + t.text + "' in scalar context", t.pos);
                if (auto g = pres_->find_generator(t.text)) return NCPoly::gen(*g);
                throw parse_error("unknown generator '" + t.text + "'", t.pos);
            }
            default:
                throw parse_error("expected a number, parameter, generator or '('", t.pos);
        }
    }

    Lexer lex_;
    const Presentation* pres_;
};

std::string format_rational(const Rational& r) { return r.str(); }

std::string format_mono(const Mono& m, const Rational& coeff) {
    std::string vars;
    auto addv = [&](const char* n, int e) {
        if (e == 0) return;
        if (!vars.empty()) vars += "*";
        vars += n;
        if (e != 1) vars += "^" + std::to_string(e);
    };
    addv("q", m.eq);
    addv("p", m.ep);
    addv("s", m.es);
    if (vars.empty()) return format_rational(coeff);
    if (coeff == 1) return vars;
    return format_rational(coeff) + "*" + vars;
}

// Terms joined with +/-, deglex-descending, no spaces: "q^4-2*s^2+1".
std::string format_laurent(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::vector<std::pair<Mono, Rational>> ts(a.terms().begin(), a.terms().end());
    std::sort(ts.begin(), ts.end(), [](auto& x, auto& y) { return mono_deglex_less(y.first, x.first); });
    std::string out;
    for (auto& [m, c] : ts) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        out += format_mono(m, mag);
    }
    return out;
}

bool laurent_is_single_atom(const LaurentPoly& a) {
    if (a.terms().size() != 1) return false;
    auto& [m, c] = *a.terms().begin();
    if (m == Mono{}) return true; // plain integer
    int nvars = (m.eq != 0) + (m.ep != 0) + (m.es != 0);
    return c == 1 && nvars == 1;
}

// Rendering of a (positive-leading) coefficient usable as a product factor.
std::string format_coeff_factor(const ParamScalar& c) {
    std::string num = format_laurent(c.num());
    if (c.num().terms().size() > 1 || c.num().leading_term().second < 0) num = "(" + num + ")";
    if (c.den().is_one()) return num;
    std::string den = format_laurent(c.den());
    if (!laurent_is_single_atom(c.den())) den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace

NCPoly parse_element(const std::string& text, const Presentation& P) {
    Parser parser(text, &P);
    NCPoly value = parser.parse_expr();
    parser.expect_end();
    return normal_form(P, value);
}

ParamScalar parse_scalar(const std::string& text) {
    Parser parser(text, nullptr);
    NCPoly value = parser.parse_expr();
    parser.expect_end();
    return value.scalar_value();
}

AlgMatrix parse_matrix(const std::string& text, const Presentation& P) {
    Parser parser(text, &P);
    parser.expect(Tok::lbracket, "'['");
    std::vector<std::vector<NCPoly>> rows;
    while (true) {
        parser.expect(Tok::lbracket, "'[' starting a row");
        std::vector<NCPoly> row;
        while (true) {
            row.push_back(parser.parse_expr());
            if (parser.peek().kind == Tok::comma) {
                parser.take();
                continue;
            }
            break;
        }
        parser.expect(Tok::rbracket, "']' ending a row");
        rows.push_back(std::move(row));
        if (parser.peek().kind == Tok::comma) {
            parser.take();
            continue;
        }
        break;
    }
    Token close = parser.expect(Tok::rbracket, "']' ending the matrix");
    parser.expect_end();
    for (auto& row : rows)
        if (row.size() != rows.front().size())
            throw parse_error("ragged matrix: rows of unequal length", close.pos);
    std::vector<NCPoly> entries;
    for (auto& row : rows)
        for (auto& e : row) entries.push_back(std::move(e));
    return AlgMatrix::from_entries(P, rows.size(), rows.front().size(), std::move(entries));
}

RMatrix parse_rmatrix(const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> lines;
    std::size_t offset = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string body = line.substr(0, line.find('#'));
        auto first = body.find_first_not_of(" \t\r");
        if (first != std::string::npos) {
            auto last = body.find_last_not_of(" \t\r");
            lines.emplace_back(body.substr(first, last - first + 1), offset + first);
        }
        offset += line.size() + 1;
    }
    if (lines.empty()) throw parse_error("empty R-matrix document", 0);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(lines[0].first, &used);
        if (used != lines[0].first.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw parse_error("expected the dimension n on the first line", lines[0].second);
    }
    if (n < 1) throw parse_error("R-matrix dimension must be >= 1", lines[0].second);
    std::size_t expected = static_cast<std::size_t>(n) * n * n * n;
    if (lines.size() - 1 != expected)
        throw parse_error("expected " + std::to_string(expected) + " entries, found " +
                              std::to_string(lines.size() - 1),
                          lines.back().second);
    RMatrix R(n);
    std::size_t idx = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    try {
                        R.set(i, j, k, l, parse_scalar(lines[idx].first));
                    } catch (const parse_error& e) {
                        throw parse_error(std::string("in R-matrix entry: ") + e.what(),
                                          lines[idx].second);
                    }
                    ++idx;
                }
    return R;
}

std::string format_scalar(const ParamScalar& c) {
    if (c.is_zero()) return "0";
    if (c.den().is_one()) return format_laurent(c.num());
    std::string num = format_laurent(c.num());
    if (c.num().terms().size() > 1) num = "(" + num + ")";
    std::string den = format_laurent(c.den());
    if (!laurent_is_single_atom(c.den())) den = "(" + den + ")";
    return num + "/" + den;
}

std::string format_word(const Word& w, const Presentation& P) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        if (!out.empty()) out += "*";
        out += P.name_of(w[i]);
        if (run > 1) out += "^" + std::to_string(run);
        i += run;
    }
    return out;
}

std::string format_element(const NCPoly& a, const Presentation& P) {
    if (a.is_zero()) return "0";
    std::vector<std::pair<Word, ParamScalar>> ts(a.terms().begin(), a.terms().end());
    std::sort(ts.begin(), ts.end(),
              [&](auto& x, auto& y) { return P.order().less(y.first, x.first); });
    std::string out;
    for (auto& [w, c] : ts) {
        bool negative = c.num().leading_term().second < 0;
        ParamScalar mag = negative ? -c : c;
        std::string piece;
        if (w.empty()) {
            piece = format_scalar(mag);
            bool multi = mag.num().terms().size() > 1 || !mag.den().is_one();
            if (multi) piece = "(" + piece + ")";
        } else if (mag.is_one()) {
            piece = format_word(w, P);
        } else {
            piece = format_coeff_factor(mag) + "*" + format_word(w, P);
        }
        if (out.empty()) {
            out = negative ? "-" + piece : piece;
        } else {
            out += negative ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

std::string format_matrix(const AlgMatrix& A) {
    std::string out = "[";
    for (std::size_t i = 0; i < A.rows(); ++i) {
        out += i == 0 ? "[" : " [";
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j) out += ", ";
            out += format_element(A.at(i, j), A.presentation());
        }
        out += i + 1 == A.rows() ? "]" : "],\n";
    }
    return out + "]";
}

std::string format_rmatrix(const RMatrix& R) {
    std::ostringstream os;
    os << "# R-matrix: dimension line, then n^4 entries R^{ij}_{kl},\n"
       << "# one per line, indices (i,j,k,l) in row-major order.\n"
       << R.n() << "\n";
    for (int i = 0; i < R.n(); ++i)
        for (int j = 0; j < R.n(); ++j)
            for (int k = 0; k < R.n(); ++k)
                for (int l = 0; l < R.n(); ++l) os << format_scalar(R.at(i, j, k, l)) << "\n";
    return os.str();
}

} // namespace ncs
