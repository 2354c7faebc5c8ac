#ifndef CURVEPI_PRESENTATION_HPP_
#define CURVEPI_PRESENTATION_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvepi/word.hpp"

namespace curvepi {

  // A finite presentation <generators | relators>.
  //
  // Relators are stored cyclically reduced; identity relators are dropped.
  // Generator names must match [A-Za-z][A-Za-z0-9_']* and be distinct.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> generators, std::vector<Word> relators);

    std::vector<std::string> const& generators() const noexcept {
      return generators_;
    }
    std::vector<Word> const& relators() const noexcept {
      return relators_;
    }
    std::size_t num_generators() const noexcept {
      return generators_.size();
    }
    std::optional<GenIndex> find_generator(std::string_view name) const;
    // Index of a generator that must exist; throws Error otherwise.
    GenIndex index_of(std::string_view name) const;

    // Same generators, relators appended.
    Presentation with_relators(std::vector<Word> const& extra) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    std::vector<std::string> generators_;
    std::vector<Word>        relators_;
  };

  bool is_identifier(std::string_view name);

  // Parses the presentation DSL:
  //
  //   presentation := "<" gen-list "|" relator-list ">"
  //   gen-list     := (ident ("," ident)*)?
  //   relator-list := (relator ("," relator)*)?
  //   relator      := word ("=" word)*
  //   word         := atom+
  //   atom         := (ident | "1" | "(" word ")" | "[" word "," word "]")
  //                   ("^" signed-int)?
  //
  // U+27E8/U+27E9 angle brackets are accepted. A chain w1 = w2 = ... = wk
  // yields the relators w1 w2^-1, w2 w3^-1, ... An identifier that is not a
  // declared generator is split into declared generator names ("aba").
  Presentation parse_presentation(std::string_view text);

  // Parses a word (the `word` production, optionally an equality chain
  // collapsed to w1 w2^-1) over the given generator names.
  Word parse_word(std::string_view text, std::vector<std::string> const& generators);
  // Comma-separated list of words.
  std::vector<Word> parse_word_list(std::string_view text,
                                    std::vector<std::string> const& generators);

  std::string format_word(Word const& w, std::vector<std::string> const& generators);
  std::string format_presentation(Presentation const& p);

  void to_json(nlohmann::json& j, Presentation const& p);
  void from_json(nlohmann::json const& j, Presentation& p);
  nlohmann::json word_to_json(Word const& w, std::vector<std::string> const& generators);
  Word word_from_json(nlohmann::json const& j, Presentation const& p);

}  // namespace curvepi

#endif  // CURVEPI_PRESENTATION_HPP_
