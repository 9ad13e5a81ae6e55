// Word syntax for the central-extension groups.
//
//   word   := factor*                      (separated by spaces or '*')
//   factor := atom ('^' ['-'] INT)?
//   atom   := 'a' INT | 'b' INT | 'c' | 'comm(' word ',' word ')' | '(' word ')'

#include <cctype>
#include <limits>

#include "ctrep/errors.hpp"
#include "ctrep/extensions.hpp"

namespace ctrep {
namespace {

class WordParser {
public:
    explicit WordParser(std::string_view text) : text_(text) {}

    Word parse() {
        Word w = word();
        skip();
        if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
        return w;
    }

private:
    Word word() {
        Word out;
        for (;;) {
            skip();
            if (at_end() || peek() == ')' || peek() == ',') return out;
            out = concat(out, factor());
        }
    }

    Word factor() {
        skip();
        const std::size_t start = pos_;
        auto [w, single] = atom();
        skip();
        if (!accept('^')) return w;
        skip();
        const bool negative = accept('-');
        skip();
        const long k = number();
        const long e = negative ? -k : k;
        if (single) {
            Letter l = w.letters.front();
            const long combined = l.exponent * e;
            return letter_word(l.kind, l.index, combined);
        }
        Word base = e < 0 ? inverse(w) : w;
        Word out;
        const long reps = e < 0 ? -e : e;
        if (reps > 4096) throw ParseError("group exponent too large", start);
        for (long r = 0; r < reps; ++r) out = concat(out, base);
        return out;
    }

    std::pair<Word, bool> atom() {
        if (text_.substr(pos_).starts_with("comm")) {
            pos_ += 4;
            skip();
            expect('(');
            Word u = word();
            skip();
            expect(',');
            Word v = word();
            skip();
            expect(')');
            return {commutator_word(u, v), false};
        }
        if (accept('(')) {
            Word inner = word();
            skip();
            expect(')');
            return {inner, false};
        }
        if (accept('a')) return {letter_word(Letter::Kind::a, index()), true};
        if (accept('b')) return {letter_word(Letter::Kind::b, index()), true};
        if (accept('c')) return {letter_word(Letter::Kind::c), true};
        if (at_end()) fail("unexpected end of word");
        fail(std::string("unexpected '") + peek() + "'");
    }

    GeneratorId index() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected generator index");
        try {
            return std::stoull(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("generator index out of range", start);
        }
    }

    long number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected exponent");
        try {
            return std::stol(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            throw ParseError("exponent out of range", start);
        }
    }

    void skip() {
        while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool accept(char ch) {
        if (at_end() || peek() != ch) return false;
        ++pos_;
        return true;
    }
    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

} // namespace ctrep
