#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualcat/errors.hpp"

namespace dualcat {

using Symbol = std::string;
using Word = std::vector<Symbol>;

// An alphabet with a partial successor map pairing each letter with the one
// closing it on the right. The map must be injective and free of cycles.
// Infinite alphabets (naturals, integers) are rule-based; finite ones keep
// an explicit table.
class Signature {
 public:
  enum class Kind { Dpr, Nat, Int, Table };

  Signature() = default;  // the '-'/'+' signature

  // letters '-' and '+' with '-' succeeded by '+'
  static Signature dpr();
  // decimal naturals with n succeeded by n+1
  static Signature nat();
  // all decimal integers with n succeeded by n+1
  static Signature integers();
  // explicit finite table; rejects non-injective or cyclic successor maps
  static Signature from_pairs(std::vector<Symbol> letters,
                              std::vector<std::pair<Symbol, Symbol>> succ);
  // the free alphabet `letters` with one extra letter j+"^" succeeding j
  static Signature adjoin_dual(std::vector<Symbol> letters, const Symbol& j);
  // "dpr" | "dseq" | "dz" | "cjv:<comma letters>:<j>"
  static Signature parse_descriptor(const std::string& text);

  Kind kind() const { return kind_; }
  bool has_letter(const Symbol& s) const;
  std::optional<Symbol> next(const Symbol& s) const;
  std::optional<Symbol> prev(const Symbol& s) const;
  // finite table letters in registration order; empty for rule-based kinds
  const std::vector<Symbol>& letters() const { return letters_; }
  const std::string& descriptor() const { return descriptor_; }

  // Splits on whitespace; a token-free dpr word may also be written as a
  // contiguous run of '-' and '+'. Every token must be a letter.
  Word parse_word(const std::string& text) const;
  std::string print_word(const Word& w) const;

  bool operator==(const Signature&) const = default;

 private:
  Kind kind_ = Kind::Dpr;
  std::vector<Symbol> letters_;
  std::map<Symbol, Symbol> next_, prev_;
  std::string descriptor_ = "dpr";
};

}  // namespace dualcat
