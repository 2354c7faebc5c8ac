#include "curvepi/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "curvepi/error.hpp"

namespace curvepi {

  namespace {
    bool ident_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) != 0;
    }
    bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'
             || c == '\'';
    }
  }  // namespace

  bool is_identifier(std::string_view name) {
    if (name.empty() || !ident_start(name.front())) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), ident_char);
  }

  Presentation::Presentation(std::vector<std::string> generators,
                             std::vector<Word>        relators)
      : generators_(std::move(generators)) {
    std::set<std::string_view> seen;
    for (auto const& g : generators_) {
      if (!is_identifier(g)) {
        throw Error("invalid generator name '" + g + "'");
      }
      if (!seen.insert(g).second) {
        throw Error("duplicate generator name '" + g + "'");
      }
    }
    relators_.reserve(relators.size());
    for (auto const& r : relators) {
      if (r.generator_bound() > generators_.size()) {
        throw Error("relator references an undeclared generator");
      }
      Word c = r.cyclically_reduced();
      if (!c.empty()) {
        relators_.push_back(std::move(c));
      }
    }
  }

  std::optional<GenIndex> Presentation::find_generator(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (generators_[i] == name) {
        return static_cast<GenIndex>(i);
      }
    }
    return std::nullopt;
  }

  GenIndex Presentation::index_of(std::string_view name) const {
    if (auto i = find_generator(name)) {
      return *i;
    }
    throw Error("unknown generator '" + std::string(name) + "'");
  }

  Presentation Presentation::with_relators(std::vector<Word> const& extra) const {
    std::vector<Word> rels = relators_;
    rels.insert(rels.end(), extra.begin(), extra.end());
    return Presentation(generators_, std::move(rels));
  }

  ////////////////////////////////////////////////////////////////////////
  // DSL parser
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      std::vector<std::string> generators;

      Presentation presentation() {
        skip_ws();
        expect_open();
        skip_ws();
        if (!at_bar()) {
          generator_decl();
          skip_ws();
          while (peek() == ',') {
            advance();
            skip_ws();
            generator_decl();
            skip_ws();
          }
        }
        if (!at_bar()) {
          fail("expected '|'");
        }
        advance();
        skip_ws();
        std::vector<Word> relators;
        if (!at_close()) {
          relator(relators);
          skip_ws();
          while (peek() == ',') {
            advance();
            skip_ws();
            relator(relators);
            skip_ws();
          }
        }
        expect_close();
        skip_ws();
        if (!done()) {
          fail("unexpected trailing input");
        }
        return Presentation(generators, std::move(relators));
      }

      void relator(std::vector<Word>& out) {
        std::vector<Word> sides{word()};
        skip_ws();
        while (peek() == '=') {
          advance();
          skip_ws();
          sides.push_back(word());
          skip_ws();
        }
        if (sides.size() == 1) {
          out.push_back(std::move(sides.front()));
          return;
        }
        for (std::size_t i = 0; i + 1 < sides.size(); ++i) {
          out.push_back(sides[i] * sides[i + 1].inverse());
        }
      }

      Word word() {
        skip_ws();
        if (!atom_start()) {
          fail("expected a word");
        }
        Word w;
        while (atom_start()) {
          w *= atom();
          skip_ws();
        }
        return w;
      }

      bool done() const {
        return pos_ >= text_.size();
      }
      void skip_ws() {
        while (!done()
               && (std::isspace(static_cast<unsigned char>(text_[pos_])) != 0
                   || text_[pos_] == '*')) {
          advance();
        }
      }
      char peek() const {
        return done() ? '\0' : text_[pos_];
      }
      bool consume(char c) {
        if (peek() != c) {
          return false;
        }
        advance();
        return true;
      }
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, line_, col_);
      }

     private:
      static constexpr std::string_view kOpenAngle  = "\xE2\x9F\xA8";
      static constexpr std::string_view kCloseAngle = "\xE2\x9F\xA9";

      void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && !done(); ++i) {
          char c = text_[pos_++];
          if (c == '\n') {
            ++line_;
            col_ = 1;
          } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++col_;
          }
        }
      }
      bool starts_with(std::string_view s) const {
        return text_.substr(pos_, s.size()) == s;
      }
      bool at_bar() const {
        return peek() == '|';
      }
      bool at_close() const {
        return peek() == '>' || starts_with(kCloseAngle);
      }
      void expect_open() {
        if (peek() == '<') {
          advance();
        } else if (starts_with(kOpenAngle)) {
          pos_ += kOpenAngle.size();
          ++col_;
        } else {
          fail("expected '<'");
        }
      }
      void expect_close() {
        if (peek() == '>') {
          advance();
        } else if (starts_with(kCloseAngle)) {
          pos_ += kCloseAngle.size();
          ++col_;
        } else {
          fail("expected '>'");
        }
      }

      std::string identifier() {
        if (!ident_start(peek())) {
          fail("expected an identifier");
        }
        std::size_t start = pos_;
        while (!done() && ident_char(text_[pos_])) {
          advance();
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      void generator_decl() {
        std::size_t line = line_, col = col_;
        std::string name = identifier();
        if (std::find(generators.begin(), generators.end(), name) != generators.end()) {
          throw ParseError("duplicate generator '" + name + "'", line, col);
        }
        generators.push_back(std::move(name));
      }

      bool atom_start() const {
        char c = peek();
        return ident_start(c) || c == '(' || c == '[' || c == '1';
      }

      Word atom() {
        Word prefix;
        Word base;
        char c = peek();
        if (c == '(') {
          advance();
          base = word();
          skip_ws();
          if (peek() != ')') {
            fail("expected ')'");
          }
          advance();
        } else if (c == '[') {
          advance();
          Word u = word();
          skip_ws();
          if (peek() != ',') {
            fail("expected ',' in commutator");
          }
          advance();
          Word v = word();
          skip_ws();
          if (peek() != ']') {
            fail("expected ']'");
          }
          advance();
          base = commutator(u, v);
        } else if (c == '1') {
          advance();
          if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            fail("unexpected number");
          }
        } else {
          std::size_t line = line_, col = col_;
          std::string name = identifier();
          auto letters = resolve(name);
          if (!letters) {
            throw ParseError("undeclared generator '" + name + "'", line, col);
          }
          // In a split token such as "abab" an exponent binds to the last
          // generator only.
          for (std::size_t i = 0; i + 1 < letters->size(); ++i) {
            prefix *= Word{gen((*letters)[i])};
          }
          base = Word{gen(letters->back())};
        }
        std::size_t save_pos = pos_, save_line = line_, save_col = col_;
        skip_ws();
        if (peek() != '^') {
          pos_  = save_pos;
          line_ = save_line;
          col_  = save_col;
          return prefix * base;
        }
        advance();
        skip_ws();
        return prefix * base.pow(exponent());
      }

      long exponent() {
        std::size_t line = line_, col = col_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
          negative = peek() == '-';
          advance();
        }
        if (std::isdigit(static_cast<unsigned char>(peek())) == 0) {
          fail("expected an integer exponent");
        }
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
          value = value * 10 + (peek() - '0');
          if (value > 1'000'000) {
            throw ParseError("exponent too large", line, col);
          }
          advance();
        }
        if (value == 0) {
          throw ParseError("zero exponent", line, col);
        }
        return negative ? -value : value;
      }

      // Declared name, or a split of the token into declared names
      // preferring longer names first.
      std::optional<std::vector<GenIndex>> resolve(std::string_view token) const {
        std::map<std::size_t, std::optional<std::vector<GenIndex>>> memo;
        return split(token, 0, memo);
      }

      std::optional<std::vector<GenIndex>> split(
          std::string_view                                              token,
          std::size_t                                                   at,
          std::map<std::size_t, std::optional<std::vector<GenIndex>>>& memo) const {
        if (at == token.size()) {
          return std::vector<GenIndex>{};
        }
        if (auto it = memo.find(at); it != memo.end()) {
          return it->second;
        }
        std::vector<std::size_t> order(generators.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
          order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(), [this](auto x, auto y) {
          return generators[x].size() > generators[y].size();
        });
        std::optional<std::vector<GenIndex>> result;
        for (std::size_t i : order) {
          auto const& name = generators[i];
          if (token.substr(at, name.size()) == name) {
            if (auto rest = split(token, at + name.size(), memo)) {
              rest->insert(rest->begin(), static_cast<GenIndex>(i));
              result = std::move(rest);
              break;
            }
          }
        }
        memo[at] = result;
        return result;
      }

      std::string_view text_;
      std::size_t      pos_  = 0;
      std::size_t      line_ = 1;
      std::size_t      col_  = 1;
    };

  }  // namespace

  Presentation parse_presentation(std::string_view text) {
    Parser parser(text);
    return parser.presentation();
  }

  Word parse_word(std::string_view text, std::vector<std::string> const& generators) {
    Parser parser(text);
    parser.generators = generators;
    std::vector<Word> out;
    parser.skip_ws();
    parser.relator(out);
    parser.skip_ws();
    if (!parser.done()) {
      parser.fail("unexpected trailing input");
    }
    if (out.size() > 1) {
      parser.fail("equality chains are not a single word");
    }
    return out.front();
  }

  std::vector<Word> parse_word_list(std::string_view                text,
                                    std::vector<std::string> const& generators) {
    Parser parser(text);
    parser.generators = generators;
    std::vector<Word> out;
    parser.skip_ws();
    if (parser.done()) {
      return out;
    }
    parser.relator(out);
    parser.skip_ws();
    while (parser.consume(',')) {
      parser.skip_ws();
      parser.relator(out);
      parser.skip_ws();
    }
    if (!parser.done()) {
      parser.fail("unexpected trailing input");
    }
    return out;
  }

  std::string format_word(Word const& w, std::vector<std::string> const& generators) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    auto const  letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      std::size_t j = i;
      while (j < letters.size() && letters[j] == letters[i]) {
        ++j;
      }
      long run = static_cast<long>(j - i) * letters[i].sign;
      if (!out.empty()) {
        out += ' ';
      }
      out += generators.at(letters[i].gen);
      if (run != 1) {
        out += '^' + std::to_string(run);
      }
      i = j;
    }
    return out;
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.generators().size(); ++i) {
      out += (i == 0 ? "" : ", ") + p.generators()[i];
    }
    out += " | ";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      out += (i == 0 ? "" : ", ") + format_word(p.relators()[i], p.generators());
    }
    out += ">";
    return out;
  }

  nlohmann::json word_to_json(Word const& w, std::vector<std::string> const& generators) {
    auto arr = nlohmann::json::array();
    for (Letter x : w) {
      arr.push_back(nlohmann::json::array({generators.at(x.gen), static_cast<int>(x.sign)}));
    }
    return arr;
  }

  Word word_from_json(nlohmann::json const& j, Presentation const& p) {
    std::vector<Letter> letters;
    for (auto const& entry : j) {
      if (!entry.is_array() || entry.size() != 2) {
        throw Error("word letters must be [name, +1|-1] pairs");
      }
      int sign = entry[1].get<int>();
      if (sign != 1 && sign != -1) {
        throw Error("letter exponent must be +1 or -1");
      }
      letters.push_back({p.index_of(entry[0].get<std::string>()),
                         static_cast<std::int8_t>(sign)});
    }
    return Word(std::span<Letter const>(letters));
  }

  void to_json(nlohmann::json& j, Presentation const& p) {
    j                = nlohmann::json::object();
    j["generators"]  = p.generators();
    auto rels        = nlohmann::json::array();
    for (auto const& r : p.relators()) {
      rels.push_back(word_to_json(r, p.generators()));
    }
    j["relators"] = std::move(rels);
  }

  void from_json(nlohmann::json const& j, Presentation& p) {
    Presentation bare(j.at("generators").get<std::vector<std::string>>(), {});
    std::vector<Word> rels;
    for (auto const& r : j.at("relators")) {
      rels.push_back(word_from_json(r, bare));
    }
    p = Presentation(bare.generators(), std::move(rels));
  }

}  // namespace curvepi
