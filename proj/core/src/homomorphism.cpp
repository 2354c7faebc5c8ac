#include "curvepi/homomorphism.hpp"

#include <utility>

#include <nlohmann/json.hpp>

#include "curvepi/abelian.hpp"
#include "curvepi/error.hpp"

namespace curvepi {

  SubstitutionMap::SubstitutionMap(Presentation source, Presentation target, std::vector<Word> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.num_generators()) {
      throw Error("substitution needs one image per source generator");
    }
    for (Word const& w : images_) {
      if (w.generator_bound() > target_.num_generators()) {
        throw Error("image word uses a generator outside the target");
      }
    }
  }

  SubstitutionMap SubstitutionMap::from_strings(
      Presentation                                             source,
      Presentation                                             target,
      std::vector<std::pair<std::string, std::string>> const& images) {
    std::vector<Word> words(source.num_generators());
    std::vector<bool> given(source.num_generators(), false);
    for (auto const& [name, text] : images) {
      GenIndex const g = source.index_of(name);
      if (given[g]) {
        throw Error("generator '" + name + "' mapped twice");
      }
      given[g] = true;
      words[g] = parse_word(text, target.generators());
    }
    for (std::size_t g = 0; g < given.size(); ++g) {
      if (!given[g]) {
        throw Error("no image for generator '" + source.generators()[g] + "'");
      }
    }
    return SubstitutionMap(std::move(source), std::move(target), std::move(words));
  }

  SubstitutionMap SubstitutionMap::identity(Presentation const& p) {
    std::vector<Word> images;
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
      images.push_back(Word::generator(static_cast<GenIndex>(g)));
    }
    return SubstitutionMap(p, p, std::move(images));
  }

  Word substitute(SubstitutionMap const& m, Word const& w) {
    Word out;
    for (Letter x : w) {
      if (x.gen >= m.images().size()) {
        throw Error("word uses a generator outside the source");
      }
      out *= x.sign > 0 ? m.images()[x.gen] : m.images()[x.gen].inverse();
    }
    return out;
  }

  SubstitutionMap compose(SubstitutionMap const& first, SubstitutionMap const& second) {
    std::vector<Word> images;
    for (Word const& w : first.images()) {
      images.push_back(substitute(second, w));
    }
    return SubstitutionMap(first.source(), second.target(), std::move(images));
  }

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::verified:
        return "verified";
      case Verdict::refuted:
        return "refuted";
      case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
  }

  namespace {

    // Sound refutation of "w is trivial in p".
    std::optional<RefutationWitness> refute(Presentation const& p,
                                            Word const&         w,
                                            std::size_t         max_cosets) {
      AbelianizationMap const ab(p);
      if (!ab.is_trivial(w)) {
        RefutationWitness witness;
        witness.method = "abelianization";
        witness.image  = w;
        witness.detail = "image is non-trivial in " + to_string(ab.invariants());
        return witness;
      }
      if (ab.invariants().free_rank() != 0 || max_cosets == 0) {
        return std::nullopt;
      }
      EnumLimits limits;
      limits.max_cosets = max_cosets;
      auto result       = todd_coxeter(p, {}, limits);
      if (auto const* t = std::get_if<CosetTable>(&result)) {
        // Regular action: an element is trivial iff it fixes coset 0.
        if (t->trace(0, w) != 0) {
          RefutationWitness witness;
          witness.method         = "finite-quotient";
          witness.image          = w;
          witness.quotient_order = t->size();
          witness.detail = "image acts non-trivially on the regular action of order "
                           + std::to_string(t->size());
          return witness;
        }
      }
      return std::nullopt;
    }

    // Shows each word trivial in p, or refutes one of them.
    HomomorphismCheck check_words(Presentation const&      p,
                                  std::vector<Word> const& words,
                                  DerivationBudget const&  budget,
                                  std::size_t              refutation_cosets) {
      HomomorphismCheck out;
      std::size_t       open = 0;
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto result = derive_relator(p, words[i], budget);
        if (auto* trace = std::get_if<ProofTrace>(&result)) {
          out.traces.emplace_back(std::move(*trace));
        } else {
          out.traces.emplace_back(std::nullopt);
          ++open;
        }
      }
      if (open == 0) {
        out.verdict = Verdict::verified;
        out.detail  = "all " + std::to_string(words.size()) + " words derived";
        return out;
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (out.traces[i]) {
          continue;
        }
        if (auto witness = refute(p, words[i], refutation_cosets)) {
          witness->relator = i;
          out.verdict      = Verdict::refuted;
          out.detail       = "word " + std::to_string(i) + ": " + witness->detail;
          out.witness      = std::move(witness);
          return out;
        }
      }
      out.verdict = Verdict::inconclusive;
      out.detail  = std::to_string(open) + " of " + std::to_string(words.size())
                   + " words not derived within budget";
      return out;
    }

    std::vector<Word> relator_images(SubstitutionMap const& m) {
      std::vector<Word> out;
      for (Word const& r : m.source().relators()) {
        out.push_back(substitute(m, r));
      }
      return out;
    }

  }  // namespace

  HomomorphismCheck check_homomorphism(SubstitutionMap const&  m,
                                       DerivationBudget const& budget,
                                       std::size_t             refutation_cosets) {
    return check_words(m.target(), relator_images(m), budget, refutation_cosets);
  }

  IsomorphismCheck check_isomorphism(SubstitutionMap const&  forward,
                                     SubstitutionMap const&  backward,
                                     DerivationBudget const& budget) {
    if (!(forward.source() == backward.target()) || !(forward.target() == backward.source())) {
      throw Error("maps are not between the same pair of presentations");
    }
    IsomorphismCheck out;
    out.forward  = check_homomorphism(forward, budget);
    out.backward = check_homomorphism(backward, budget);

    // g^-1 * back(forth(g)) in the source, h^-1 * forth(back(h)) in the target.
    auto const there_and_back = compose(forward, backward);
    auto const back_and_there = compose(backward, forward);
    std::vector<Word> source_words;
    for (std::size_t g = 0; g < there_and_back.images().size(); ++g) {
      source_words.push_back(Word::generator(static_cast<GenIndex>(g), -1)
                             * there_and_back.images()[g]);
    }
    std::vector<Word> target_words;
    for (std::size_t g = 0; g < back_and_there.images().size(); ++g) {
      target_words.push_back(Word::generator(static_cast<GenIndex>(g), -1)
                             * back_and_there.images()[g]);
    }
    auto const source_check = check_words(forward.source(), source_words, budget, kRefutationCosets);
    auto const target_check = check_words(forward.target(), target_words, budget, kRefutationCosets);
    out.compositions        = source_check.traces;
    out.compositions.insert(out.compositions.end(), target_check.traces.begin(),
                            target_check.traces.end());

    auto const verdicts = {out.forward.verdict, out.backward.verdict, source_check.verdict,
                           target_check.verdict};
    bool all_verified = true;
    bool any_refuted  = false;
    for (Verdict v : verdicts) {
      all_verified = all_verified && v == Verdict::verified;
      any_refuted  = any_refuted || v == Verdict::refuted;
    }
    out.verdict = all_verified ? Verdict::verified
                  : any_refuted ? Verdict::refuted
                                : Verdict::inconclusive;
    out.detail = "forward " + to_string(out.forward.verdict) + ", backward "
                 + to_string(out.backward.verdict) + ", source composite "
                 + to_string(source_check.verdict) + ", target composite "
                 + to_string(target_check.verdict);
    return out;
  }

  HomomorphismCheck check_preimages(SubstitutionMap const&   m,
                                    std::vector<Word> const& preimages,
                                    DerivationBudget const&  budget) {
    if (preimages.size() != m.target().num_generators()) {
      throw Error("need one preimage per target generator");
    }
    std::vector<Word> words;
    for (std::size_t g = 0; g < preimages.size(); ++g) {
      words.push_back(Word::generator(static_cast<GenIndex>(g), -1) * substitute(m, preimages[g]));
    }
    return check_words(m.target(), words, budget, kRefutationCosets);
  }

  nlohmann::json to_json(HomomorphismCheck const& c, Presentation const& target) {
    nlohmann::json traces = nlohmann::json::array();
    for (auto const& t : c.traces) {
      traces.push_back(t ? trace_to_json(*t, target) : nlohmann::json(nullptr));
    }
    nlohmann::json out{{"verdict", to_string(c.verdict)}, {"detail", c.detail}, {"traces", traces}};
    if (c.witness) {
      out["witness"] = {{"method", c.witness->method},
                        {"relator", c.witness->relator},
                        {"image", format_word(c.witness->image, target.generators())},
                        {"quotient_order", c.witness->quotient_order},
                        {"detail", c.witness->detail}};
    }
    return out;
  }

}  // namespace curvepi
