#include "ncrep/expr.hpp"

#include <cctype>

#include "ncrep/error.hpp"

namespace ncrep
{

namespace
{

class ExprParser
{
public:
    ExprParser(std::string_view text, QuiverPtr q) : m_text(text), m_quiver(std::move(q)) {}

    NCForm parse()
    {
        skip_space();
        if (at_end()) {
            fail("empty expression");
        }
        NCForm u = expr();
        skip_space();
        if (!at_end()) {
            if (peek() == ')') {
                fail("unbalanced ')'");
            }
            fail(std::string("unexpected '") + peek() + "'");
        }
        return u;
    }

    bool saw_differential() const { return m_saw_d; }

private:
    bool at_end() const { return m_pos >= m_text.size(); }
    char peek() const { return at_end() ? '\0' : m_text[m_pos]; }

    [[noreturn]] void fail(const std::string &msg) const { fail_at(msg, m_pos); }
    [[noreturn]] static void fail_at(const std::string &msg, std::size_t pos) { throw ParseError(msg, 1, pos + 1); }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++m_pos;
        }
    }

    bool accept(char c)
    {
        skip_space();
        if (peek() == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    NCForm expr()
    {
        NCForm acc(m_quiver);
        bool negate = false;
        skip_space();
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++m_pos;
        }
        for (;;) {
            NCForm t = term();
            if (negate) {
                acc -= t;
            } else {
                acc += t;
            }
            skip_space();
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                ++m_pos;
                continue;
            }
            return acc;
        }
    }

    NCForm term()
    {
        NCForm acc = factor();
        while (accept('*')) {
            acc = acc * factor();
        }
        return acc;
    }

    NCForm factor()
    {
        skip_space();
        if (at_end()) {
            fail("expected a factor, found end of input");
        }
        const char c = peek();
        if (c == '-') {
            ++m_pos;
            return -factor();
        }
        if (c == '(') {
            const std::size_t open = m_pos;
            ++m_pos;
            NCForm u = expr();
            if (!accept(')')) {
                fail_at("unbalanced '('", open);
            }
            return u;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            return NCForm::from_algebra(AlgebraElement::scalar(m_quiver, rational()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            return symbol();
        }
        fail(std::string("unexpected '") + c + "'");
    }

    Rational rational()
    {
        const std::size_t start = m_pos;
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            digits.push_back(peek());
            ++m_pos;
        }
        if (peek() == '/') {
            digits.push_back('/');
            ++m_pos;
            if (std::isdigit(static_cast<unsigned char>(peek())) == 0) {
                fail_at("malformed rational: missing denominator", start);
            }
            while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                digits.push_back(peek());
                ++m_pos;
            }
        }
        if (peek() == '.' || std::isalpha(static_cast<unsigned char>(peek())) != 0 || peek() == '_') {
            fail_at("malformed rational", start);
        }
        try {
            return parse_rational(digits);
        } catch (const std::invalid_argument &e) {
            fail_at(std::string("malformed rational: ") + e.what(), start);
        }
    }

    NCForm symbol()
    {
        const std::size_t start = m_pos;
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '_')) {
            name.push_back(peek());
            ++m_pos;
        }
        while (peek() == m_quiver->suffix()) {
            name.push_back(peek());
            ++m_pos;
        }
        const auto &q = *m_quiver;
        if (name == "d") {
            const std::size_t save = m_pos;
            if (accept('(')) {
                const std::size_t open = m_pos - 1;
                NCForm u = expr();
                if (!accept(')')) {
                    fail_at("unbalanced '('", open);
                }
                m_saw_d = true;
                return d_form(u);
            }
            m_pos = save;
        }
        if (auto a = q.find_arrow(name)) {
            return NCForm::from_algebra(AlgebraElement::arrow(m_quiver, *a));
        }
        if (name.rfind("e_", 0) == 0) {
            if (auto v = q.find_vertex(name.substr(2))) {
                return NCForm::from_algebra(AlgebraElement::idempotent(m_quiver, *v));
            }
            fail_at("undefined vertex '" + name.substr(2) + "' in idempotent '" + name + "'", start);
        }
        fail_at("undefined symbol '" + name + "'", start);
    }

    std::string_view m_text;
    QuiverPtr m_quiver;
    std::size_t m_pos = 0;
    bool m_saw_d = false;
};

} // namespace

ExprValue parse_expr(std::string_view text, const QuiverPtr &q)
{
    ExprParser p(text, q);
    NCForm u = p.parse();
    if (!p.saw_differential()) {
        return u.to_algebra();
    }
    return u;
}

NCForm parse_form(std::string_view text, const QuiverPtr &q)
{
    return ExprParser(text, q).parse();
}

AlgebraElement parse_element(std::string_view text, const QuiverPtr &q)
{
    ExprParser p(text, q);
    NCForm u = p.parse();
    if (p.saw_differential()) {
        const auto pos = text.find('d');
        throw ParseError("expected an algebra element, found a differential", 1, pos + 1);
    }
    return u.to_algebra();
}

std::string print_word(const Quiver &q, const FormWord &w)
{
    if (w.is_trivial()) {
        return "e_" + q.vertex_name(w.head());
    }
    std::string out;
    for (std::size_t i = 0; i < w.length(); ++i) {
        const auto l = w.letter(i);
        if (i > 0) {
            out += "*";
        }
        const auto &name = q.arrow(l.arrow).name;
        out += l.differential ? "d(" + name + ")" : name;
    }
    return out;
}

std::string print_expr(const NCForm &u)
{
    if (u.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[w, c] : u.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        if (mag != 1) {
            out += to_string(mag) + "*";
        }
        out += print_word(*u.quiver(), w);
    }
    return out;
}

std::string print_expr(const AlgebraElement &x)
{
    return print_expr(NCForm::from_algebra(x));
}

} // namespace ncrep
