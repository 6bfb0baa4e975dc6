#ifndef LINKHOM_DSL_HPP
#define LINKHOM_DSL_HPP

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/decide.hpp"
#include "linkhom/link.hpp"

namespace linkhom {

struct ParseError : std::runtime_error {
    int line;
    int column;

    ParseError(int line_, int column_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ": " + msg),
          line(line_), column(column_)
    {
    }
};

/// A string-link input file: a colors header followed by a generator word.
///
///   doc    := header word?
///   header := "colors" ":" INT+ NEWLINE
///   word   := term*
///   term   := gen ("^" SINT)?
///   gen    := "a" "(" comp "," comp ")" | "t" "(" comp ("," comp)+ ")"
///   comp   := "(" INT "," INT ")"
///
/// "#" starts a comment running to the end of the line; whitespace between
/// tokens is otherwise insignificant.  A comment "# name: ..." names the
/// document.  a(...) accepts same-color components (such clasps are
/// trivial up to the colored homotopy); t(...) with two entries is sugar
/// for the clasp.
struct LinkDocument {
    ComponentDecomposition decomposition;
    std::vector<GeneratorLink> word;
    std::optional<std::string> name;
    std::optional<std::string> comment;
};

/// A spatial bouquet-graph input: either per-component (vertices, edges)
/// counts, reduced by contracting spanning trees, or a direct colors
/// header; then the generator word of the underlying string link.
///
///   graph   := gheader word?
///   gheader := "components" ":" vepair+ NEWLINE | header
///   vepair  := "(" INT "," INT ")"
struct GraphDocument {
    std::vector<std::pair<int, int>> components; // empty for direct headers
    ComponentDecomposition decomposition;
    std::vector<GeneratorLink> word;
    std::optional<std::string> name;
    std::optional<std::string> comment;
};

namespace detail {

struct Token {
    enum class Kind { Ident, Number, Punct, Newline, End };
    Kind kind = Kind::End;
    std::string text;
    long long value = 0;
    int line = 1;
    int column = 1;
};

class DocParser {
public:
    explicit DocParser(std::string text) : text_(std::move(text)) {}

    ComponentDecomposition parse_colors_header()
    {
        Token t = next(true);
        if (t.kind != Token::Kind::Ident || t.text != "colors")
            throw ParseError(t.line, t.column, "expected 'colors' header");
        expect_punct(next(false), ':');
        std::vector<int> counts;
        for (;;) {
            Token n = next(false);
            if (n.kind == Token::Kind::Newline || n.kind == Token::Kind::End)
                break;
            if (n.kind != Token::Kind::Number || n.value < 1)
                throw ParseError(n.line, n.column,
                                 "expected a positive strand count");
            counts.push_back(static_cast<int>(n.value));
        }
        if (counts.empty())
            throw ParseError(t.line, t.column, "header lists no colors");
        return ComponentDecomposition(counts);
    }

    /// Either a "components" header of (vertices, edges) pairs or a plain
    /// colors header.  Returns the pair list (empty for a direct header)
    /// and the resulting decomposition.
    std::pair<std::vector<std::pair<int, int>>, ComponentDecomposition>
    parse_graph_header()
    {
        Token t = next(true);
        if (t.kind == Token::Kind::Ident && t.text == "colors") {
            putback(t);
            return {{}, parse_colors_header()};
        }
        if (t.kind != Token::Kind::Ident || t.text != "components")
            throw ParseError(t.line, t.column,
                             "expected 'components' or 'colors' header");
        expect_punct(next(false), ':');
        std::vector<std::pair<int, int>> pairs;
        for (;;) {
            Token n = next(false);
            if (n.kind == Token::Kind::Newline || n.kind == Token::Kind::End)
                break;
            expect_punct(n, '(');
            Token v = next(false);
            if (v.kind != Token::Kind::Number)
                throw ParseError(v.line, v.column, "expected a vertex count");
            expect_punct(next(false), ',');
            Token e = next(false);
            if (e.kind != Token::Kind::Number)
                throw ParseError(e.line, e.column, "expected an edge count");
            expect_punct(next(false), ')');
            pairs.emplace_back(static_cast<int>(v.value),
                               static_cast<int>(e.value));
        }
        if (pairs.empty())
            throw ParseError(t.line, t.column, "header lists no components");
        ComponentDecomposition l;
        try {
            l = bouquet_reduction(pairs);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(t.line, t.column, ex.what());
        }
        return {pairs, l};
    }

    std::vector<GeneratorLink> parse_word(const ComponentDecomposition& l)
    {
        std::vector<GeneratorLink> word;
        for (;;) {
            Token t = next(true);
            if (t.kind == Token::Kind::End)
                break;
            parse_term(l, t, word);
        }
        return word;
    }

    const std::optional<std::string>& name() const { return name_; }
    const std::optional<std::string>& comment() const { return comment_; }

private:
    void parse_term(const ComponentDecomposition& l, const Token& head,
                    std::vector<GeneratorLink>& word)
    {
        if (head.kind != Token::Kind::Ident ||
            (head.text != "a" && head.text != "t"))
            throw ParseError(head.line, head.column,
                             "expected generator 'a' or 't', got '" +
                                 head.text + "'");
        bool is_clasp = head.text == "a";
        expect_punct(next(true), '(');
        std::vector<ComponentId> comps;
        comps.push_back(parse_component(l));
        for (;;) {
            Token sep = next(true);
            if (sep.kind == Token::Kind::Punct && sep.text == ")")
                break;
            expect_punct(sep, ',');
            comps.push_back(parse_component(l));
        }

        GeneratorLink g;
        if (is_clasp) {
            if (comps.size() != 2)
                throw ParseError(head.line, head.column,
                                 "a(...) takes exactly two components");
            if (comps[0] == comps[1])
                throw ParseError(head.line, head.column,
                                 "a(...) needs two distinct components");
            g = GeneratorLink::clasp(comps[0], comps[1]);
        } else {
            if (comps.size() < 2)
                throw ParseError(head.line, head.column,
                                 "t(...) takes at least two components");
            IndexSequence j{comps};
            if (!canonical_index_sequence(j, l))
                throw ParseError(
                    head.line, head.column,
                    "t" + to_string(j) +
                        " is malformed: entries need pairwise distinct "
                        "colors, a minimal first entry and a maximal last "
                        "entry");
            g = comps.size() == 2 ? GeneratorLink::clasp(comps[0], comps[1])
                                  : GeneratorLink::clasper(j);
        }

        long long exponent = 1;
        Token peek = next(true);
        if (peek.kind == Token::Kind::Punct && peek.text == "^") {
            Token e = next(true);
            if (e.kind != Token::Kind::Number)
                throw ParseError(e.line, e.column, "expected an exponent");
            if (e.value > 100000 || e.value < -100000)
                throw ParseError(e.line, e.column, "exponent out of range");
            exponent = e.value;
        } else {
            putback(peek);
        }
        GeneratorLink use = exponent < 0 ? g.inverted() : g;
        for (long long r = 0; r < (exponent < 0 ? -exponent : exponent); ++r)
            word.push_back(use);
    }

    ComponentId parse_component(const ComponentDecomposition& l)
    {
        Token open = next(true);
        expect_punct(open, '(');
        Token a = next(true);
        if (a.kind != Token::Kind::Number)
            throw ParseError(a.line, a.column, "expected a color number");
        expect_punct(next(true), ',');
        Token b = next(true);
        if (b.kind != Token::Kind::Number)
            throw ParseError(b.line, b.column, "expected a strand index");
        expect_punct(next(true), ')');
        ComponentId c{static_cast<int>(a.value), static_cast<int>(b.value)};
        if (!l.valid(c))
            throw ParseError(open.line, open.column,
                             "component " + to_string(c) + " out of range");
        return c;
    }

    static void expect_punct(const Token& t, char c)
    {
        if (t.kind != Token::Kind::Punct || t.text[0] != c)
            throw ParseError(t.line, t.column,
                             std::string("expected '") + c + "', got '" +
                                 (t.kind == Token::Kind::End ? "end of input"
                                                             : t.text) +
                                 "'");
    }

    Token next(bool skip_newlines)
    {
        if (look_) {
            Token t = *look_;
            look_.reset();
            if (!(skip_newlines && t.kind == Token::Kind::Newline))
                return t;
        }
        for (;;) {
            Token t = lex();
            if (skip_newlines && t.kind == Token::Kind::Newline)
                continue;
            return t;
        }
    }

    void putback(const Token& t) { look_ = t; }

    Token lex()
    {
        for (;;) {
            skip_blanks_and_comments();
            if (pos_ >= text_.size())
                return make(Token::Kind::End, "end of input");
            char c = text_[pos_];
            if (c == '\n') {
                Token t = make(Token::Kind::Newline, "\n");
                advance();
                return t;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                Token t = make(Token::Kind::Ident, "");
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                    t.text += text_[pos_];
                    advance();
                }
                return t;
            }
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
                Token t = make(Token::Kind::Number, "");
                if (c == '-') {
                    t.text += c;
                    advance();
                    if (pos_ >= text_.size() ||
                        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                        throw ParseError(t.line, t.column,
                                         "expected digits after '-'");
                }
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    t.text += text_[pos_];
                    advance();
                }
                try {
                    t.value = std::stoll(t.text);
                } catch (const std::exception&) {
                    throw ParseError(t.line, t.column, "number out of range");
                }
                return t;
            }
            if (c == '(' || c == ')' || c == ',' || c == ':' || c == '^') {
                Token t = make(Token::Kind::Punct, std::string(1, c));
                advance();
                return t;
            }
            throw ParseError(line_, column_,
                             std::string("unexpected character '") + c + "'");
        }
    }

    Token make(Token::Kind k, std::string text)
    {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.line = line_;
        t.column = column_;
        return t;
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_blanks_and_comments()
    {
        for (;;) {
            while (pos_ < text_.size() && text_[pos_] != '\n' &&
                   std::isspace(static_cast<unsigned char>(text_[pos_])))
                advance();
            if (pos_ < text_.size() && text_[pos_] == '#') {
                std::string body;
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    body += text_[pos_];
                    advance();
                }
                record_comment(body);
                continue;
            }
            return;
        }
    }

    void record_comment(const std::string& raw)
    {
        std::string body = raw.substr(1);
        std::size_t b = body.find_first_not_of(" \t");
        if (b == std::string::npos)
            return;
        body = body.substr(b);
        if (body.rfind("name:", 0) == 0) {
            std::string n = body.substr(5);
            std::size_t s = n.find_first_not_of(" \t");
            if (s != std::string::npos && !name_)
                name_ = n.substr(s);
        } else if (!comment_) {
            comment_ = body;
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    std::optional<Token> look_;
    std::optional<std::string> name_;
    std::optional<std::string> comment_;
};

} // namespace detail

inline LinkDocument parse_link(const std::string& text)
{
    detail::DocParser p(text);
    LinkDocument doc;
    doc.decomposition = p.parse_colors_header();
    doc.word = p.parse_word(doc.decomposition);
    doc.name = p.name();
    doc.comment = p.comment();
    return doc;
}

inline GraphDocument parse_graph(const std::string& text)
{
    detail::DocParser p(text);
    GraphDocument doc;
    auto [pairs, l] = p.parse_graph_header();
    doc.components = std::move(pairs);
    doc.decomposition = std::move(l);
    doc.word = p.parse_word(doc.decomposition);
    doc.name = p.name();
    doc.comment = p.comment();
    return doc;
}

inline std::string serialize_generator(const GeneratorLink& g)
{
    std::string out = g.kind == GeneratorLink::Kind::Clasp ? "a(" : "t(";
    for (std::size_t i = 0; i < g.comps.size(); ++i) {
        if (i)
            out += ",";
        out += to_string(g.comps[i]);
    }
    out += ")";
    return out;
}

/// Normalized text form: header line, then the word with runs of one
/// generator compressed into exponents.
inline std::string serialize_link(const LinkDocument& doc)
{
    std::ostringstream out;
    if (doc.name)
        out << "# name: " << *doc.name << "\n";
    if (doc.comment)
        out << "# " << *doc.comment << "\n";
    out << "colors:";
    for (int c : doc.decomposition.counts())
        out << " " << c;
    out << "\n";
    std::size_t i = 0;
    bool first = true;
    while (i < doc.word.size()) {
        std::size_t j = i;
        while (j < doc.word.size() && doc.word[j] == doc.word[i])
            ++j;
        long long run = static_cast<long long>(j - i) * doc.word[i].sign;
        GeneratorLink base = doc.word[i];
        base.sign = 1;
        if (!first)
            out << " ";
        first = false;
        out << serialize_generator(base);
        if (run != 1)
            out << "^" << run;
        i = j;
    }
    if (!doc.word.empty())
        out << "\n";
    return out.str();
}

} // namespace linkhom

#endif
