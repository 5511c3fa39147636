#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synth/errors.hpp"

namespace synth {

/// A finite, ordered alphabet of distinct atomic symbols. Symbols are opaque
/// tokens with a printable name; multi-character tokens (e.g. "0.") count as
/// a single symbol. An alphabet may additionally admit an open class of
/// literal tokens (e.g. rational endpoints "p/q"), recognised by a predicate
/// rather than listed; the listed symbols stay finite and ordered so that
/// canonical enumeration remains well defined.
class Alphabet {
public:
  using TokenClass = std::function<bool(std::string_view)>;

  Alphabet(std::string name, std::vector<std::string> symbols);
  Alphabet(std::string name, std::vector<std::string> symbols,
           std::string token_class_name, TokenClass token_class);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  bool contains(std::string_view token) const;
  bool has_token_class() const noexcept { return static_cast<bool>(token_class_); }
  const std::string& token_class_name() const noexcept { return token_class_name_; }

private:
  std::string name_;
  std::vector<std::string> symbols_;
  std::set<std::string, std::less<>> index_;
  std::string token_class_name_;
  TokenClass token_class_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A form: a finite sequence of symbols drawn from a declared alphabet.
/// Forms are immutable; equality and ordering are token-sequence equality,
/// which keeps them plain public strings of symbols.
class Form {
public:
  Form(AlphabetPtr alphabet, std::vector<std::string> tokens);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::size_t size() const noexcept { return tokens_.size(); }

  /// Printable rendering: the tokens concatenated in order.
  std::string text() const;

  /// The set of distinct symbols occurring in the form.
  std::set<std::string> footprint() const;

  bool operator==(const Form& other) const noexcept {
    return tokens_ == other.tokens_;
  }
  std::strong_ordering operator<=>(const Form& other) const noexcept {
    return tokens_ <=> other.tokens_;
  }

private:
  AlphabetPtr alphabet_;
  std::vector<std::string> tokens_;
};

/// A formal language: an alphabet plus a total decision procedure that
/// singles out the well-formed token sequences.
class FormalLanguage {
public:
  using WellFormed = std::function<bool(std::span<const std::string>)>;

  FormalLanguage(std::string name, AlphabetPtr alphabet, WellFormed well_formed);

  const std::string& name() const noexcept { return name_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

  bool well_formed(std::span<const std::string> tokens) const;

  /// Builds a form after checking alphabet membership and well-formedness.
  /// Throws UnknownSymbol for a token outside the alphabet, IllFormed when
  /// the sequence is rejected by the well-formedness predicate.
  Form make_form(std::vector<std::string> tokens) const;

private:
  std::string name_;
  AlphabetPtr alphabet_;
  WellFormed well_formed_;
};

Form make_form(const FormalLanguage& language, std::vector<std::string> tokens);

std::set<std::string> footprint(const Form& form);

/// Concatenation under a language's well-formedness check.
Form concat(const FormalLanguage& language, const Form& a, const Form& b);

}  // namespace synth
