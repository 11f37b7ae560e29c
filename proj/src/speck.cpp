#include "riddle/speck.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "riddle/errors.hpp"

namespace riddle {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok { ident, number, string, lbrace, rbrace, lparen, rparen, colon, comma, semi, equals, slash, newline, eof, invalid };

struct Token {
    Tok type = Tok::eof;
    std::string text;
    SourceSpan span;
};

std::string describe(const Token& t) {
    switch (t.type) {
    case Tok::newline: return "end of line";
    case Tok::eof: return "end of input";
    case Tok::string: return "string \"" + t.text + "\"";
    default: return "'" + t.text + "'";
    }
}

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blanks();
            if (pos_ >= src_.size()) {
                out.push_back({Tok::eof, "", {line_, column_, 0}});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    void skip_blanks() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        // Columns count code points: UTF-8 continuation bytes do not move them.
        const auto c = static_cast<unsigned char>(src_[pos_++]);
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if ((c & 0xC0) != 0x80) {
            ++column_;
        }
    }

    Token next() {
        const SourceSpan start{line_, column_, 0};
        const std::size_t begin = pos_;
        const char c = src_[pos_];
        Token t;
        if (c == '\n') {
            advance();
            return {Tok::newline, "\\n", {start.line, start.column, 1}};
        }
        if (ident_start(c)) {
            while (pos_ < src_.size() && ident_char(src_[pos_]))
                advance();
            t.type = Tok::ident;
        } else if (digit(c) || (c == '-' && pos_ + 1 < src_.size() && digit(src_[pos_ + 1]))) {
            advance();
            while (pos_ < src_.size() && digit(src_[pos_]))
                advance();
            t.type = Tok::number;
        } else if (c == '"') {
            return string_literal(start);
        } else {
            advance();
            switch (c) {
            case '{': t.type = Tok::lbrace; break;
            case '}': t.type = Tok::rbrace; break;
            case '(': t.type = Tok::lparen; break;
            case ')': t.type = Tok::rparen; break;
            case ':': t.type = Tok::colon; break;
            case ',': t.type = Tok::comma; break;
            case ';': t.type = Tok::semi; break;
            case '=': t.type = Tok::equals; break;
            case '/': t.type = Tok::slash; break;
            default:
                // Swallow the rest of a multi-byte character.
                while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80)
                    advance();
                t.type = Tok::invalid;
            }
        }
        t.text = std::string(src_.substr(begin, pos_ - begin));
        t.span = {start.line, start.column, column_ - start.column};
        return t;
    }

    Token string_literal(SourceSpan start) {
        advance();  // opening quote
        std::string value;
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
            if (src_[pos_] == '\\' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == '"' || src_[pos_ + 1] == '\\')) {
                advance();
            }
            value += src_[pos_];
            advance();
        }
        if (pos_ >= src_.size() || src_[pos_] != '"')
            return {Tok::invalid, "\"" + value, {start.line, start.column, column_ - start.column}};
        advance();
        return {Tok::string, value, {start.line, start.column, column_ - start.column}};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// ---------------------------------------------------------------------------
// Syntax tree
// ---------------------------------------------------------------------------

struct Word {
    std::string text;
    SourceSpan span;
};

struct RawNumber {
    Rational value;
    SourceSpan span;
};

struct NumberValue {
    RawNumber number;
    std::optional<Word> word;
};

struct WordsValue {
    std::vector<Word> words;
};

struct ListEntry {
    Word name;
    RawNumber number;
};

struct ListValue {
    SourceSpan open;
    std::vector<ListEntry> entries;
};

using RawValue = std::variant<NumberValue, WordsValue, ListValue>;

struct Assign {
    Word key;
    RawValue value;
};

struct Find {
    Word keyword;
    Word target;
    std::vector<Assign> where;
};

struct RawBlock {
    SourceSpan start;
    Word kind;
    std::optional<std::string> label;
    std::vector<Assign> assigns;
    std::vector<Find> finds;
};

SourceSpan value_span(const RawValue& v) {
    return std::visit(
        [](const auto& x) -> SourceSpan {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, NumberValue>)
                return x.number.span;
            else if constexpr (std::is_same_v<T, WordsValue>)
                return x.words.front().span;
            else
                return x.open;
        },
        v);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct BlockAbort {};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::vector<ParseError>& errors) : toks_(std::move(tokens)), errors_(errors) {}

    std::vector<RawBlock> run() {
        std::vector<RawBlock> blocks;
        while (true) {
            skip(Tok::newline, Tok::semi);
            if (peek().type == Tok::eof)
                return blocks;
            in_body_ = false;
            const std::size_t start = pos_;
            try {
                blocks.push_back(block());
            } catch (const BlockAbort&) {
                if (pos_ == start)
                    take();
                recover();
            }
        }
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    const Token& take() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size())
            ++pos_;
        return t;
    }

    template <typename... T>
    void skip(T... types) {
        while (((peek().type == types) || ...))
            take();
    }

    [[noreturn]] void fail(const Token& at, const std::string& expected) {
        std::string msg = "unexpected " + describe(at) + "; expected " + expected;
        if (at.type == Tok::invalid && !at.text.empty() && at.text.front() == '"')
            msg = "unterminated string";
        errors_.push_back({at.span, ParseErrorKind::Syntax, msg});
        throw BlockAbort{};
    }

    const Token& expect(Tok type, const std::string& expected) {
        if (peek().type != type)
            fail(peek(), expected);
        return take();
    }

    bool at_line_start() const {
        return pos_ == 0 || toks_[pos_ - 1].type == Tok::newline || toks_[pos_ - 1].type == Tok::rbrace;
    }

    void recover() {
        while (peek().type != Tok::eof) {
            if (peek().type == Tok::rbrace) {
                take();
                return;
            }
            if (!in_body_ && peek().type == Tok::ident && peek().text == "puzzle" && at_line_start())
                return;
            take();
        }
    }

    RawBlock block() {
        const Token& kw = peek();
        if (kw.type != Tok::ident || kw.text != "puzzle")
            fail(kw, "'puzzle'");
        take();
        RawBlock b;
        b.start = kw.span;
        const Token& kind = expect(Tok::ident, "a puzzle kind (rate, weighing, pigeonhole, transfer, station)");
        b.kind = {kind.text, kind.span};
        if (peek().type == Tok::string)
            b.label = take().text;
        skip(Tok::newline);
        expect(Tok::lbrace, "'{'");
        in_body_ = true;
        while (true) {
            skip(Tok::newline, Tok::semi);
            if (peek().type == Tok::rbrace) {
                take();
                return b;
            }
            statement(b);
            const Tok after = peek().type;
            if (after != Tok::semi && after != Tok::newline && after != Tok::rbrace)
                fail(peek(), "';', end of line or '}'");
        }
    }

    void statement(RawBlock& b) {
        const Token& head = expect(Tok::ident, "a key or 'find'");
        if (head.text == "find" && peek().type != Tok::equals) {
            Find f;
            f.keyword = {head.text, head.span};
            const Token& target = expect(Tok::ident, "the unknown to find (work, subjects or time)");
            f.target = {target.text, target.span};
            const Token& where = expect(Tok::ident, "'where'");
            if (where.text != "where")
                fail(where, "'where'");
            f.where.push_back(assign(expect(Tok::ident, "a key")));
            while (peek().type == Tok::comma) {
                take();
                skip(Tok::newline);
                f.where.push_back(assign(expect(Tok::ident, "a key")));
            }
            b.finds.push_back(std::move(f));
            return;
        }
        b.assigns.push_back(assign(head));
    }

    Assign assign(const Token& key) {
        Assign a;
        a.key = {key.text, key.span};
        expect(Tok::equals, "'=' after '" + key.text + "'");
        a.value = value();
        return a;
    }

    RawValue value() {
        const Token& t = peek();
        if (t.type == Tok::number) {
            NumberValue v{number(), std::nullopt};
            if (peek().type == Tok::ident) {
                const Token& w = take();
                v.word = Word{w.text, w.span};
            }
            return v;
        }
        if (t.type == Tok::lparen)
            return list();
        if (t.type == Tok::ident) {
            WordsValue v;
            const Token& w = take();
            v.words.push_back({w.text, w.span});
            if (peek().type == Tok::ident) {
                const Token& w2 = take();
                v.words.push_back({w2.text, w2.span});
            }
            return v;
        }
        fail(t, "a number, a color list or a word");
    }

    RawNumber number() {
        const Token& p = expect(Tok::number, "a number");
        SourceSpan span = p.span;
        std::string text = p.text;
        if (peek().type == Tok::slash) {
            take();
            const Token& q = peek();
            if (q.type != Tok::number || q.text.front() == '-')
                fail(q, "a positive denominator");
            take();
            if (BigInt(q.text) == 0) {
                errors_.push_back({q.span, ParseErrorKind::Syntax, "zero denominator in '" + text + "/" + q.text + "'"});
                throw BlockAbort{};
            }
            text += "/" + q.text;
            if (q.span.line == span.line)
                span.length = q.span.column + q.span.length - span.column;
        }
        return {Rational::parse(text), span};
    }

    ListValue list() {
        ListValue v;
        v.open = take().span;
        skip(Tok::newline);
        if (peek().type == Tok::rparen) {
            take();
            return v;
        }
        while (true) {
            skip(Tok::newline);
            const Token& name = expect(Tok::ident, "a color name");
            expect(Tok::colon, "':' after '" + name.text + "'");
            RawNumber n = number();
            v.entries.push_back({{name.text, name.span}, std::move(n)});
            skip(Tok::newline);
            if (peek().type == Tok::comma) {
                take();
                continue;
            }
            expect(Tok::rparen, "',' or ')'");
            return v;
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    bool in_body_ = false;
    std::vector<ParseError>& errors_;
};

// ---------------------------------------------------------------------------
// Semantic checks: raw blocks to puzzle specs
// ---------------------------------------------------------------------------

std::string join_keys(const std::vector<std::string>& keys) {
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i)
            out += i + 1 == keys.size() ? " or " : ", ";
        out += keys[i];
    }
    return out;
}

class Builder {
public:
    Builder(const RawBlock& block, std::vector<ParseError>& errors) : block_(block), errors_(errors) {}

    std::optional<PuzzleSpec> run() {
        const auto kind = puzzle_kind_from_string(block_.kind.text);
        if (!kind) {
            error(block_.kind.span, ParseErrorKind::UnknownKind,
                  "unknown puzzle kind '" + block_.kind.text + "'; expected rate, weighing, pigeonhole, transfer or station");
            return std::nullopt;
        }
        std::optional<PuzzlePayload> payload;
        try {
            switch (*kind) {
            case PuzzleKind::rate: payload = rate(); break;
            case PuzzleKind::weighing: payload = weighing(); break;
            case PuzzleKind::pigeonhole: payload = pigeonhole(); break;
            case PuzzleKind::transfer: payload = transfer(); break;
            case PuzzleKind::station: payload = station(); break;
            }
        } catch (const InvalidInstance& e) {
            error(block_.kind.span, ParseErrorKind::TypeMismatch, std::string("invalid ") + block_.kind.text + ": " + e.what());
            return std::nullopt;
        }
        if (!payload || failed_)
            return std::nullopt;
        return PuzzleSpec{std::move(*payload), block_.label};
    }

private:
    using Keyed = std::map<std::string, const Assign*>;

    void error(SourceSpan span, ParseErrorKind kind, std::string message) {
        failed_ = true;
        errors_.push_back({span, kind, std::move(message)});
    }

    /// Index assigns by key, flagging duplicates and keys outside `allowed`.
    Keyed index(const std::vector<Assign>& assigns, const std::vector<std::string>& allowed, const std::string& where) {
        Keyed out;
        for (const auto& a : assigns) {
            if (std::find(allowed.begin(), allowed.end(), a.key.text) == allowed.end()) {
                error(a.key.span, ParseErrorKind::Syntax,
                      "unknown key '" + a.key.text + "' in " + where + "; expected " + join_keys(allowed));
                continue;
            }
            if (!out.emplace(a.key.text, &a).second)
                error(a.key.span, ParseErrorKind::DuplicateKey, "key '" + a.key.text + "' given twice in " + where);
        }
        return out;
    }

    const Assign* require(const Keyed& keys, const std::string& key, SourceSpan where) {
        auto it = keys.find(key);
        if (it == keys.end()) {
            error(where, ParseErrorKind::MissingKey, "missing key '" + key + "' in " + block_.kind.text + " puzzle");
            return nullptr;
        }
        return it->second;
    }

    void no_finds() {
        for (const auto& f : block_.finds)
            error(f.keyword.span, ParseErrorKind::Syntax,
                  "'find' is only allowed in rate puzzles, not in " + block_.kind.text);
    }

    const NumberValue* number_value(const Assign& a) {
        const auto* n = std::get_if<NumberValue>(&a.value);
        if (!n)
            error(value_span(a.value), ParseErrorKind::TypeMismatch, "'" + a.key.text + "' expects a number");
        return n;
    }

    std::optional<std::int64_t> integer(const RawNumber& n, const std::string& what, bool positive) {
        if (n.value.is_negative()) {
            error(n.span, ParseErrorKind::NegativeCount, what + " must not be negative, got " + n.value.to_string());
            return std::nullopt;
        }
        if (!n.value.is_integer()) {
            error(n.span, ParseErrorKind::TypeMismatch, what + " must be a whole number, got " + n.value.to_string());
            return std::nullopt;
        }
        if (positive && n.value.is_zero()) {
            error(n.span, ParseErrorKind::NegativeCount, what + " must be at least 1, got 0");
            return std::nullopt;
        }
        if (n.value.num() > std::numeric_limits<std::int64_t>::max()) {
            error(n.span, ParseErrorKind::TypeMismatch, what + " " + n.value.to_string() + " is too large");
            return std::nullopt;
        }
        return n.value.num().convert_to<std::int64_t>();
    }

    std::optional<std::int64_t> count(const Assign* a, bool positive) {
        if (!a)
            return std::nullopt;
        const auto* n = number_value(*a);
        if (!n)
            return std::nullopt;
        if (n->word && (n->word->text == "min" || n->word->text == "h")) {
            error(n->word->span, ParseErrorKind::BadUnit, "'" + a->key.text + "' is a count; time unit '" + n->word->text + "' not allowed");
            return std::nullopt;
        }
        return integer(n->number, "'" + a->key.text + "'", positive);
    }

    bool positive_magnitude(const Assign& a, const RawNumber& n) {
        if (n.value.is_negative()) {
            error(n.span, ParseErrorKind::NegativeCount, "'" + a.key.text + "' must not be negative, got " + n.value.to_string());
            return false;
        }
        if (n.value.is_zero()) {
            error(n.span, ParseErrorKind::NegativeCount, "'" + a.key.text + "' must be positive, got 0");
            return false;
        }
        return true;
    }

    std::optional<Quantity> count_quantity(const Assign* a) {
        if (!a)
            return std::nullopt;
        const auto* n = number_value(*a);
        if (!n)
            return std::nullopt;
        if (n->word && (n->word->text == "min" || n->word->text == "h")) {
            error(n->word->span, ParseErrorKind::BadUnit,
                  "'" + a->key.text + "' is a count; time unit '" + n->word->text + "' not allowed");
            return std::nullopt;
        }
        if (!positive_magnitude(*a, n->number))
            return std::nullopt;
        return Quantity::count(n->number.value, n->word ? n->word->text : std::string{});
    }

    std::optional<Quantity> time_quantity(const Assign* a) {
        if (!a)
            return std::nullopt;
        const auto* n = number_value(*a);
        if (!n)
            return std::nullopt;
        if (!n->word) {
            error(n->number.span, ParseErrorKind::BadUnit, "'" + a->key.text + "' needs a time unit; expected min or h");
            return std::nullopt;
        }
        if (n->word->text != "min" && n->word->text != "h") {
            error(n->word->span, ParseErrorKind::BadUnit,
                  "unknown time unit '" + n->word->text + "'; expected min or h");
            return std::nullopt;
        }
        if (!positive_magnitude(*a, n->number))
            return std::nullopt;
        return n->word->text == "h" ? Quantity::hours(n->number.value) : Quantity::minutes(n->number.value);
    }

    std::optional<std::vector<ColorCount>> color_list(const Assign* a) {
        if (!a)
            return std::nullopt;
        const auto* list = std::get_if<ListValue>(&a->value);
        if (!list) {
            error(value_span(a->value), ParseErrorKind::TypeMismatch,
                  "'" + a->key.text + "' expects a color list like (red: 3, blue: 2)");
            return std::nullopt;
        }
        std::vector<ColorCount> out;
        bool ok = true;
        for (const auto& e : list->entries) {
            if (std::any_of(out.begin(), out.end(), [&](const ColorCount& c) { return c.color == e.name.text; })) {
                error(e.name.span, ParseErrorKind::DuplicateKey, "color '" + e.name.text + "' listed twice");
                ok = false;
                continue;
            }
            auto c = integer(e.number, "count for '" + e.name.text + "'", false);
            if (!c) {
                ok = false;
                continue;
            }
            out.push_back({e.name.text, *c});
        }
        if (!ok)
            return std::nullopt;
        return out;
    }

    std::optional<PuzzlePayload> rate() {
        const Keyed keys = index(block_.assigns, {"work", "subjects", "time"}, "rate puzzle");
        auto work = count_quantity(require(keys, "work", block_.kind.span));
        auto subjects = count_quantity(require(keys, "subjects", block_.kind.span));
        auto time = time_quantity(require(keys, "time", block_.kind.span));

        if (block_.finds.empty()) {
            error(block_.kind.span, ParseErrorKind::MissingKey, "rate puzzle needs a 'find <unknown> where ...' statement");
            return std::nullopt;
        }
        for (std::size_t i = 1; i < block_.finds.size(); ++i)
            error(block_.finds[i].keyword.span, ParseErrorKind::DuplicateKey, "only one 'find' statement per rate puzzle");
        const Find& f = block_.finds.front();
        const auto target = rate_field_from_string(f.target.text);
        if (!target) {
            error(f.target.span, ParseErrorKind::TypeMismatch,
                  "cannot find '" + f.target.text + "'; expected work, subjects or time");
            return std::nullopt;
        }
        std::vector<std::string> givens;
        for (auto field : {RateField::work, RateField::subjects, RateField::time})
            if (field != *target)
                givens.push_back(to_string(field));
        for (const auto& a : f.where)
            if (a.key.text == f.target.text)
                error(a.key.span, ParseErrorKind::TypeMismatch, "'" + a.key.text + "' is the unknown and cannot be given");
        std::vector<Assign> rest;
        for (const auto& a : f.where)
            if (a.key.text != f.target.text)
                rest.push_back(a);
        const Keyed where = index(rest, givens, "find clause");
        auto given = [&](const std::string& key) -> std::optional<Quantity> {
            const Assign* a = require(where, key, f.keyword.span);
            return key == "time" ? time_quantity(a) : count_quantity(a);
        };
        auto first = given(givens[0]);
        auto second = given(givens[1]);

        if (failed_ || !work || !subjects || !time || !first || !second)
            return std::nullopt;
        return RateQuery(RateScenario(*work, *subjects, *time), *target, *first, *second);
    }

    std::optional<PuzzlePayload> weighing() {
        no_finds();
        const Keyed keys = index(block_.assigns, {"objects"}, "weighing puzzle");
        auto n = count(require(keys, "objects", block_.kind.span), true);
        if (!n)
            return std::nullopt;
        return WeighingInstance(*n);
    }

    std::optional<PuzzlePayload> pigeonhole() {
        no_finds();
        const Keyed keys = index(block_.assigns, {"counts", "required"}, "pigeonhole puzzle");
        auto colors = color_list(require(keys, "counts", block_.kind.span));
        auto required = count(require(keys, "required", block_.kind.span), true);
        if (!colors || !required)
            return std::nullopt;
        if (colors->empty()) {
            error(keys.at("counts")->key.span, ParseErrorKind::TypeMismatch, "'counts' needs at least one color");
            return std::nullopt;
        }
        return PigeonholeInstance(std::move(*colors), *required);
    }

    std::optional<TransferQuery> query(const Assign* a) {
        if (!a)
            return std::nullopt;
        const auto* w = std::get_if<WordsValue>(&a->value);
        if (w && w->words.size() == 1 && w->words[0].text == "moved")
            return DrawnIsMoved{};
        if (w && w->words.size() == 2 && w->words[0].text == "color")
            return DrawnHasColor{w->words[1].text};
        error(value_span(a->value), ParseErrorKind::TypeMismatch, "'query' expects 'moved' or 'color <name>'");
        return std::nullopt;
    }

    std::optional<PuzzlePayload> transfer() {
        no_finds();
        const Keyed keys =
            index(block_.assigns, {"container_a", "container_b", "moved", "query"}, "transfer puzzle");
        auto a = color_list(require(keys, "container_a", block_.kind.span));
        auto b = color_list(require(keys, "container_b", block_.kind.span));
        auto moved = count(require(keys, "moved", block_.kind.span), true);
        auto q = query(require(keys, "query", block_.kind.span));
        if (!a || !b || !moved || !q)
            return std::nullopt;
        auto to_map = [](const std::vector<ColorCount>& v) {
            ColorMap m;
            for (const auto& c : v)
                m[c.color] = c.count;
            return m;
        };
        return TransferInstance(to_map(*a), to_map(*b), *moved, std::move(*q));
    }

    std::optional<PuzzlePayload> station() {
        no_finds();
        const Keyed keys = index(block_.assigns, {"early", "saved"}, "station puzzle");
        auto early = time_quantity(require(keys, "early", block_.kind.span));
        auto saved = time_quantity(require(keys, "saved", block_.kind.span));
        if (!early || !saved)
            return std::nullopt;
        return StationInstance(early->magnitude, saved->magnitude);
    }

    const RawBlock& block_;
    std::vector<ParseError>& errors_;
    bool failed_ = false;
};

// ---------------------------------------------------------------------------
// Serializer
// ---------------------------------------------------------------------------

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string quantity_text(const Quantity& q) {
    std::string out = q.magnitude.to_string();
    if (q.unit == Unit::minutes)
        return out + " min";
    if (!q.label.empty())
        out += " " + q.label;
    return out;
}

template <typename Range, typename Name, typename Count>
std::string list_text(const Range& r, Name name, Count count) {
    std::string out = "(";
    bool first = true;
    for (const auto& item : r) {
        if (!first)
            out += ", ";
        first = false;
        out += name(item) + ": " + std::to_string(count(item));
    }
    return out + ")";
}

std::string body(const RateQuery& q) {
    std::ostringstream out;
    const auto& k = q.known();
    out << "work = " << quantity_text(k.work()) << "; subjects = " << quantity_text(k.subjects())
        << "; time = " << quantity_text(k.time()) << "; find " << to_string(q.target()) << " where ";
    bool first = true;
    for (auto f : {RateField::work, RateField::subjects, RateField::time}) {
        if (f == q.target())
            continue;
        if (!first)
            out << ", ";
        first = false;
        out << to_string(f) << " = " << quantity_text(q.given(f));
    }
    return out.str();
}

std::string body(const WeighingInstance& w) {
    return "objects = " + std::to_string(w.n_objects());
}

std::string body(const PigeonholeInstance& p) {
    return "counts = " +
           list_text(p.colors(), [](const ColorCount& c) { return c.color; }, [](const ColorCount& c) { return c.count; }) +
           "; required = " + std::to_string(p.required());
}

std::string body(const TransferInstance& t) {
    auto name = [](const auto& kv) { return kv.first; };
    auto count = [](const auto& kv) { return kv.second; };
    return "container_a = " + list_text(t.container_a(), name, count) +
           "; container_b = " + list_text(t.container_b(), name, count) + "; moved = " + std::to_string(t.moved()) +
           "; query = " + query_to_string(t.query());
}

std::string body(const StationInstance& s) {
    return "early = " + s.early_minutes().to_string() + " min; saved = " + s.saved_minutes().to_string() + " min";
}

}  // namespace

std::string to_string(ParseErrorKind kind) {
    switch (kind) {
    case ParseErrorKind::UnknownKind: return "UnknownKind";
    case ParseErrorKind::MissingKey: return "MissingKey";
    case ParseErrorKind::DuplicateKey: return "DuplicateKey";
    case ParseErrorKind::TypeMismatch: return "TypeMismatch";
    case ParseErrorKind::BadUnit: return "BadUnit";
    case ParseErrorKind::NegativeCount: return "NegativeCount";
    case ParseErrorKind::Syntax: return "Syntax";
    }
    return "?";
}

ParseResult parse_puzzles(std::string_view source) {
    ParseResult result;
    std::vector<Token> tokens = Lexer(source).run();
    const std::vector<RawBlock> blocks = Parser(std::move(tokens), result.errors).run();

    // Syntax errors were recorded in source order during parsing; semantic
    // errors for each block are merged in by position afterwards.
    for (const auto& b : blocks)
        if (auto spec = Builder(b, result.errors).run())
            result.puzzles.push_back(std::move(*spec));

    std::stable_sort(result.errors.begin(), result.errors.end(), [](const ParseError& x, const ParseError& y) {
        return std::pair(x.span.line, x.span.column) < std::pair(y.span.line, y.span.column);
    });
    if (!result.errors.empty())
        result.puzzles.clear();
    return result;
}

std::string serialize_puzzle(const PuzzleSpec& spec) {
    std::string out = "puzzle " + to_string(spec.kind());
    if (spec.label)
        out += " " + quote(*spec.label);
    out += " { ";
    out += std::visit([](const auto& p) { return body(p); }, spec.payload);
    return out + " }";
}

}  // namespace riddle
