#include "msection/diagram_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace msec {
namespace {

struct Token {
    std::string text;
    std::size_t line, col;
};

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '^' ||
           c == '-' || c == '+';
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> toks;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == '{' || c == '}' || c == ';' || c == '=' || c == '(' || c == ')' || c == ',') {
            toks.push_back({std::string(1, c), line, col});
            ++i;
            ++col;
            continue;
        }
        if (is_word_char(c)) {
            std::size_t start = i, start_col = col;
            while (i < text.size() && is_word_char(text[i])) {
                ++i;
                ++col;
            }
            toks.push_back({text.substr(start, i - start), line, start_col});
            continue;
        }
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    return toks;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    MultisectionDiagram parse() {
        if (toks_.empty()) throw ParseError(1, 1, "empty diagram file");
        std::optional<RoseSurface> rose;
        bool closed = false;
        std::string default_variant;
        std::vector<std::pair<std::string, Monomial>> twist_entries;
        std::vector<std::pair<std::string, std::vector<std::string>>> raw_collections;
        std::vector<std::pair<std::string, std::vector<BigInt>>> raw_arcs;

        while (!at_end()) {
            const Token key = expect_word("section name");
            if (key.text == "surface") {
                if (rose) throw ParseError(key.line, key.col, "duplicate surface section");
                parse_surface(rose, closed);
            } else if (key.text == "twist") {
                parse_kv_section([&](const std::string& name, const Token& val) {
                    try {
                        twist_entries.emplace_back(name, parse_monomial(val.text));
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(val.line, val.col, e.what());
                    }
                });
            } else if (key.text == "collection") {
                const Token name = expect_word("collection name");
                raw_collections.push_back({name.text, parse_word_list()});
            } else if (key.text == "arcs") {
                parse_arcs(raw_arcs);
            } else if (key.text == "options") {
                parse_options(default_variant);
            } else {
                throw ParseError(key.line, key.col, "unknown section '" + key.text + "'");
            }
        }
        if (!rose) throw ParseError(1, 1, "missing surface section");

        MultisectionDiagram d;
        d.rose = *rose;
        d.closed = closed;
        d.default_variant = default_variant;
        d.twist = TwistSpec::trivial(d.rose.gen_count());
        for (const auto& [name, mono] : twist_entries) {
            const auto idx = d.rose.index_of(name);
            if (!idx) throw ParseError(1, 1, "twist names unknown generator '" + name + "'");
            d.twist.set_image(static_cast<std::size_t>(*idx), mono);
        }
        for (const auto& [name, words] : raw_collections) {
            CurveCollection col;
            col.name = name;
            for (const auto& w : words) {
                try {
                    col.curves.push_back(d.rose.parse_word(w));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(1, 1, std::string(e.what()) + " (collection '" + name + "')");
                }
            }
            d.collections.push_back(std::move(col));
        }
        for (const auto& [name, vec] : raw_arcs) {
            if (vec.size() != d.rose.gen_count())
                throw ParseError(1, 1, "arc '" + name + "' needs " +
                                           std::to_string(d.rose.gen_count()) + " coordinates");
            d.arcs.push_back({name, vec});
        }
        return d;
    }

private:
    bool at_end() const { return pos_ >= toks_.size(); }
    const Token& peek() const {
        if (at_end()) throw ParseError(last_line(), last_col(), "unexpected end of file");
        return toks_[pos_];
    }
    Token next() {
        const Token t = peek();
        ++pos_;
        return t;
    }
    std::size_t last_line() const { return toks_.empty() ? 1 : toks_.back().line; }
    std::size_t last_col() const { return toks_.empty() ? 1 : toks_.back().col; }

    Token expect(const std::string& text) {
        const Token t = next();
        if (t.text != text) throw ParseError(t.line, t.col, "expected '" + text + "', got '" + t.text + "'");
        return t;
    }
    Token expect_word(const std::string& what) {
        const Token t = next();
        if (t.text.size() == 1 && std::string("{};=(),").find(t.text) != std::string::npos)
            throw ParseError(t.line, t.col, "expected " + what + ", got '" + t.text + "'");
        return t;
    }

    long expect_int(const std::string& what) {
        const Token t = next();
        try {
            std::size_t used = 0;
            const long v = std::stol(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ParseError(t.line, t.col, "expected " + what + ", got '" + t.text + "'");
        }
    }

    void parse_surface(std::optional<RoseSurface>& rose, bool& closed) {
        expect("{");
        expect("genus");
        const long g = expect_int("genus");
        const Token t = next();
        if (t.text == "closed") {
            closed = true;
            expect("}");
            try {
                rose = RoseSurface::standard_closed(static_cast<int>(g));
            } catch (const std::exception& e) {
                throw ParseError(t.line, t.col, e.what());
            }
            return;
        }
        if (t.text != "boundary")
            throw ParseError(t.line, t.col, "expected 'boundary <count>' or 'closed'");
        const long b = expect_int("boundary count");
        expect("}");
        try {
            rose = RoseSurface::standard(static_cast<int>(g), static_cast<int>(b));
        } catch (const std::exception& e) {
            throw ParseError(t.line, t.col, e.what());
        }
    }

    template <class Fn>
    void parse_kv_section(Fn&& on_entry) {
        expect("{");
        while (peek().text != "}") {
            const Token name = expect_word("name");
            expect("=");
            const Token value = expect_word("value");
            on_entry(name.text, value);
            if (peek().text == ";") next();
        }
        expect("}");
    }

    std::vector<std::string> parse_word_list() {
        expect("{");
        std::vector<std::string> words;
        std::string current;
        while (peek().text != "}") {
            const Token t = next();
            if (t.text == ";") {
                words.push_back(current);
                current.clear();
            } else {
                if (!current.empty()) current += " ";
                current += t.text;
            }
        }
        expect("}");
        words.push_back(current);  // a collection holds at least one (possibly empty) word
        if (words.size() == 1 && words[0].empty()) words.clear();
        return words;
    }

    void parse_arcs(std::vector<std::pair<std::string, std::vector<BigInt>>>& arcs) {
        expect("{");
        while (peek().text != "}") {
            const Token name = expect_word("arc name");
            expect("=");
            expect("(");
            std::vector<BigInt> vec;
            while (peek().text != ")") {
                const Token t = next();
                if (t.text == ",") continue;
                try {
                    vec.push_back(BigInt(t.text));
                } catch (...) {
                    throw ParseError(t.line, t.col, "expected integer, got '" + t.text + "'");
                }
            }
            expect(")");
            arcs.push_back({name.text, vec});
            if (peek().text == ";") next();
        }
        expect("}");
    }

    void parse_options(std::string& default_variant) {
        expect("{");
        while (peek().text != "}") {
            const Token name = expect_word("option name");
            if (name.text != "variant")
                throw ParseError(name.line, name.col, "unknown option '" + name.text + "'");
            expect("=");
            const Token value = expect_word("variant");
            if (value.text != "absolute" && value.text != "relative" && value.text != "closed")
                throw ParseError(value.line, value.col,
                                 "variant must be absolute, relative or closed");
            default_variant = value.text;
            if (peek().text == ";") next();
        }
        expect("}");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

MultisectionDiagram parse_diagram(const std::string& text) { return Parser(text).parse(); }

MultisectionDiagram parse_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open diagram file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

std::string serialize_diagram(const MultisectionDiagram& d) {
    std::ostringstream os;
    os << "surface { genus " << d.rose.genus();
    if (d.closed)
        os << " closed }\n";
    else
        os << " boundary " << d.rose.boundary_components() << " }\n";
    if (!d.twist.is_trivial()) {
        os << "twist {";
        bool first = true;
        for (std::size_t g = 0; g < d.twist.gen_count(); ++g) {
            if (d.twist.image(g).is_one()) continue;
            os << (first ? " " : " ; ") << d.rose.name(g) << " = " << d.twist.image(g).str();
            first = false;
        }
        os << " }\n";
    }
    for (const auto& col : d.collections) {
        os << "collection " << col.name << " {";
        for (std::size_t j = 0; j < col.curves.size(); ++j)
            os << (j ? " ; " : " ") << d.rose.word_str(col.curves[j]);
        os << " }\n";
    }
    if (!d.arcs.empty()) {
        os << "arcs {";
        bool first = true;
        for (const auto& arc : d.arcs) {
            os << (first ? " " : " ; ") << arc.name << " = (";
            for (std::size_t k = 0; k < arc.dual.size(); ++k)
                os << (k ? ", " : "") << arc.dual[k].str();
            os << ")";
            first = false;
        }
        os << " }\n";
    }
    if (!d.default_variant.empty()) os << "options { variant = " << d.default_variant << " }\n";
    return os.str();
}

}  // namespace msec
