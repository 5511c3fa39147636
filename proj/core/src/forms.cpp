#include "synth/forms.hpp"

#include <utility>

namespace synth {

namespace {

std::set<std::string, std::less<>> build_index(const std::vector<std::string>& symbols,
                                               const std::string& alphabet_name) {
  if (symbols.empty()) {
    throw InvalidStructure("alphabet '" + alphabet_name + "' has no symbols");
  }
  std::set<std::string, std::less<>> index;
  for (const auto& s : symbols) {
    if (!index.insert(s).second) {
      throw InvalidStructure("alphabet '" + alphabet_name + "' repeats symbol '" + s + "'");
    }
  }
  return index;
}

}  // namespace

Alphabet::Alphabet(std::string name, std::vector<std::string> symbols)
    : name_(std::move(name)),
      symbols_(std::move(symbols)),
      index_(build_index(symbols_, name_)) {}

Alphabet::Alphabet(std::string name, std::vector<std::string> symbols,
                   std::string token_class_name, TokenClass token_class)
    : name_(std::move(name)),
      symbols_(std::move(symbols)),
      index_(build_index(symbols_, name_)),
      token_class_name_(std::move(token_class_name)),
      token_class_(std::move(token_class)) {}

bool Alphabet::contains(std::string_view token) const {
  if (index_.find(token) != index_.end()) {
    return true;
  }
  return token_class_ && token_class_(token);
}

Form::Form(AlphabetPtr alphabet, std::vector<std::string> tokens)
    : alphabet_(std::move(alphabet)), tokens_(std::move(tokens)) {
  if (!alphabet_) {
    throw InvalidStructure("form constructed without an alphabet");
  }
  for (const auto& t : tokens_) {
    if (!alphabet_->contains(t)) {
      throw UnknownSymbol("token '" + t + "' is not a symbol of alphabet '" +
                          alphabet_->name() + "'");
    }
  }
}

std::string Form::text() const {
  std::string out;
  for (const auto& t : tokens_) {
    out += t;
  }
  return out;
}

std::set<std::string> Form::footprint() const {
  return {tokens_.begin(), tokens_.end()};
}

FormalLanguage::FormalLanguage(std::string name, AlphabetPtr alphabet,
                               WellFormed well_formed)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      well_formed_(std::move(well_formed)) {
  if (!alphabet_) {
    throw InvalidStructure("language '" + name_ + "' constructed without an alphabet");
  }
  if (!well_formed_) {
    throw InvalidStructure("language '" + name_ + "' lacks a well-formedness predicate");
  }
}

bool FormalLanguage::well_formed(std::span<const std::string> tokens) const {
  return well_formed_(tokens);
}

Form FormalLanguage::make_form(std::vector<std::string> tokens) const {
  Form form(alphabet_, std::move(tokens));  // alphabet membership checked here
  if (!well_formed_(form.tokens())) {
    throw IllFormed("token sequence '" + form.text() + "' rejected by language '" +
                    name_ + "'");
  }
  return form;
}

Form make_form(const FormalLanguage& language, std::vector<std::string> tokens) {
  return language.make_form(std::move(tokens));
}

std::set<std::string> footprint(const Form& form) { return form.footprint(); }

Form concat(const FormalLanguage& language, const Form& a, const Form& b) {
  std::vector<std::string> tokens = a.tokens();
  tokens.insert(tokens.end(), b.tokens().begin(), b.tokens().end());
  return language.make_form(std::move(tokens));
}

}  // namespace synth
