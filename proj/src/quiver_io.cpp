#include "ncrep/quiver_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ncrep/error.hpp"

namespace ncrep
{

namespace
{

enum class Tok { ident, colon, comma, lbracket, rbracket, lbrace, rbrace, sep, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t col;
};

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '~';
}

std::string describe(const Token &t)
{
    switch (t.kind) {
    case Tok::ident:
        return "'" + t.text + "'";
    case Tok::sep:
        return "end of statement";
    case Tok::end:
        return "end of input";
    default:
        return "'" + t.text + "'";
    }
}

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    int depth = 0;
    std::size_t i = 0;
    const auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') {
                advance();
            }
            continue;
        }
        if (c == '\n' || c == ';') {
            if (c == ';' && depth > 0) {
                throw ParseError("unexpected ';' inside a list", line, col);
            }
            if (depth == 0) {
                out.push_back({Tok::sep, std::string(1, c), line, col});
            }
            advance();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            advance();
            continue;
        }
        const std::size_t l0 = line;
        const std::size_t c0 = col;
        if (ident_char(c)) {
            std::string word;
            while (i < text.size() && ident_char(text[i])) {
                word.push_back(text[i]);
                advance();
            }
            out.push_back({Tok::ident, word, l0, c0});
            continue;
        }
        Tok kind;
        switch (c) {
        case ':':
            kind = Tok::colon;
            break;
        case ',':
            kind = Tok::comma;
            break;
        case '[':
            kind = Tok::lbracket;
            ++depth;
            break;
        case ']':
            kind = Tok::rbracket;
            --depth;
            break;
        case '{':
            kind = Tok::lbrace;
            ++depth;
            break;
        case '}':
            kind = Tok::rbrace;
            --depth;
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", l0, c0);
        }
        if (depth < 0) {
            throw ParseError(std::string("unbalanced '") + c + "'", l0, c0);
        }
        out.push_back({kind, std::string(1, c), l0, c0});
        advance();
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

struct NamedToken {
    std::string name;
    std::size_t line;
    std::size_t col;
};

struct RawArrow {
    NamedToken name;
    NamedToken tail;
    NamedToken head;
};

class QuiverParser
{
public:
    explicit QuiverParser(std::string_view text) : m_toks(lex(text)) {}

    Quiver parse()
    {
        skip_seps();
        while (peek().kind != Tok::end) {
            statement();
            if (peek().kind != Tok::end) {
                expect(Tok::sep, "newline or ';' between statements");
            }
            skip_seps();
        }
        return build();
    }

private:
    const Token &peek() const { return m_toks[m_pos]; }
    const Token &take() { return m_toks[m_pos++]; }

    [[noreturn]] static void fail(const Token &t, const std::string &msg) { throw ParseError(msg, t.line, t.col); }

    const Token &expect(Tok kind, const std::string &what)
    {
        if (peek().kind != kind) {
            fail(peek(), "expected " + what + ", found " + describe(peek()));
        }
        return take();
    }

    void skip_seps()
    {
        while (peek().kind == Tok::sep) {
            ++m_pos;
        }
    }

    NamedToken name(const std::string &what)
    {
        const auto &t = expect(Tok::ident, what);
        return {t.text, t.line, t.col};
    }

    void statement()
    {
        const auto &key = expect(Tok::ident, "a key (vertices, arrows or double)");
        expect(Tok::colon, "':' after '" + key.text + "'");
        if (m_seen.count(key.text) != 0) {
            fail(key, "duplicate key '" + key.text + "'");
        }
        m_seen[key.text] = true;
        if (key.text == "vertices") {
            vertices();
        } else if (key.text == "arrows") {
            arrows();
        } else if (key.text == "double") {
            const auto &v = expect(Tok::ident, "true or false");
            if (v.text != "true" && v.text != "false") {
                fail(v, "expected true or false, found '" + v.text + "'");
            }
            m_double = v.text == "true";
        } else {
            fail(key, "unknown key '" + key.text + "'");
        }
    }

    template <typename F>
    void list(F item)
    {
        expect(Tok::lbracket, "'['");
        if (peek().kind == Tok::rbracket) {
            take();
            return;
        }
        for (;;) {
            item();
            if (peek().kind == Tok::comma) {
                take();
                continue;
            }
            expect(Tok::rbracket, "',' or ']'");
            return;
        }
    }

    void vertices()
    {
        list([&] { m_vertices.push_back(name("a vertex name")); });
    }

    void arrows()
    {
        list([&] { m_arrows.push_back(arrow()); });
    }

    RawArrow arrow()
    {
        expect(Tok::lbrace, "'{' starting an arrow record");
        const auto &first = expect(Tok::ident, "an arrow name or field");
        RawArrow a;
        if (peek().kind == Tok::colon) {
            --m_pos;
            std::map<std::string, NamedToken> fields;
            for (;;) {
                const auto &field = expect(Tok::ident, "a field name (name, tail, head)");
                if (field.text != "name" && field.text != "tail" && field.text != "head") {
                    fail(field, "unknown arrow field '" + field.text + "'");
                }
                if (fields.count(field.text) != 0) {
                    fail(field, "duplicate field '" + field.text + "'");
                }
                expect(Tok::colon, "':'");
                fields[field.text] = name("a value for '" + field.text + "'");
                if (peek().kind == Tok::comma) {
                    take();
                    continue;
                }
                break;
            }
            const auto &close = expect(Tok::rbrace, "',' or '}'");
            for (const char *f : {"name", "tail", "head"}) {
                if (fields.count(f) == 0) {
                    fail(close, std::string("arrow record is missing '") + f + "'");
                }
            }
            a = {fields["name"], fields["tail"], fields["head"]};
        } else {
            a.name = {first.text, first.line, first.col};
            expect(Tok::comma, "',' after the arrow name");
            a.tail = name("the tail vertex");
            expect(Tok::comma, "',' after the tail vertex");
            a.head = name("the head vertex");
            expect(Tok::rbrace, "'}'");
        }
        return a;
    }

    Quiver build()
    {
        const auto &end = peek();
        if (m_seen.count("vertices") == 0) {
            throw ParseError("missing 'vertices'", end.line, end.col);
        }
        std::map<std::string, VertexId> vid;
        std::vector<std::string> names;
        for (const auto &v : m_vertices) {
            for (char c : v.name) {
                if (c == '~') {
                    throw ParseError("vertex name '" + v.name + "' contains '~'", v.line, v.col);
                }
            }
            if (vid.count(v.name) != 0) {
                throw ParseError("duplicate vertex name '" + v.name + "'", v.line, v.col);
            }
            vid[v.name] = static_cast<VertexId>(names.size());
            names.push_back(v.name);
        }
        std::map<std::string, bool> seen;
        std::vector<Arrow> arrows;
        for (const auto &a : m_arrows) {
            const auto &n = a.name;
            if (std::isdigit(static_cast<unsigned char>(n.name[0])) != 0) {
                throw ParseError("arrow name '" + n.name + "' must start with a letter or '_'", n.line, n.col);
            }
            const auto tilde = n.name.find('~');
            if (tilde != std::string::npos) {
                throw ParseError("arrow name '" + n.name + "' contains the reserved suffix '~'", n.line,
                                 n.col + tilde);
            }
            if (n.name.rfind("e_", 0) == 0 && vid.count(n.name.substr(2)) != 0) {
                throw ParseError("arrow name '" + n.name + "' clashes with the idempotent of vertex '"
                                     + n.name.substr(2) + "'",
                                 n.line, n.col);
            }
            if (seen.count(n.name) != 0) {
                throw ParseError("duplicate arrow name '" + n.name + "'", n.line, n.col);
            }
            seen[n.name] = true;
            const auto endpoint = [&](const NamedToken &t) {
                auto it = vid.find(t.name);
                if (it == vid.end()) {
                    throw ParseError("unknown vertex '" + t.name + "' in arrow '" + n.name + "'", t.line, t.col);
                }
                return it->second;
            };
            arrows.push_back({n.name, endpoint(a.tail), endpoint(a.head)});
        }
        Quiver q(std::move(names), std::move(arrows));
        return m_double ? double_quiver(q) : q;
    }

    std::vector<Token> m_toks;
    std::size_t m_pos = 0;
    std::map<std::string, bool> m_seen;
    std::vector<NamedToken> m_vertices;
    std::vector<RawArrow> m_arrows;
    bool m_double = false;
};

} // namespace

Quiver parse_quiver(std::string_view text)
{
    return QuiverParser(text).parse();
}

Quiver load_quiver(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read quiver file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str());
}

std::string print_quiver(const Quiver &q)
{
    std::ostringstream out;
    if (q.is_double()) {
        out << "# arrows:";
        for (std::size_t a = 0; a < q.num_arrows(); ++a) {
            const auto &arr = q.arrow(static_cast<ArrowId>(a));
            out << (a == 0 ? " " : ", ") << arr.name << ": " << q.vertex_name(arr.tail) << " -> "
                << q.vertex_name(arr.head);
        }
        out << "\n";
    }
    out << "vertices: [";
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        out << (v == 0 ? "" : ", ") << q.vertex_name(static_cast<VertexId>(v));
    }
    out << "]\narrows: [";
    bool first = true;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto id = static_cast<ArrowId>(a);
        if (q.is_double() && q.is_starred(id)) {
            continue;
        }
        const auto &arr = q.arrow(id);
        out << (first ? "" : ", ") << "{" << arr.name << ", " << q.vertex_name(arr.tail) << ", "
            << q.vertex_name(arr.head) << "}";
        first = false;
    }
    out << "]\n";
    if (q.is_double()) {
        out << "double: true\n";
    }
    return out.str();
}

} // namespace ncrep
