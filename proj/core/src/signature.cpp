#include "dualcat/signature.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>

namespace dualcat {

namespace {

bool is_decimal(const std::string& s, bool allow_negative) {
  std::size_t i = 0;
  if (allow_negative && i < s.size() && s[i] == '-') ++i;
  if (i == s.size() || s.size() - i > 18) return false;
  if (s[i] == '0' && s.size() - i > 1) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return !(allow_negative && s == "-0");
}

std::string shift(const std::string& s, std::int64_t delta) {
  return std::to_string(std::stoll(s) + delta);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Signature Signature::dpr() {
  Signature s;
  s.kind_ = Kind::Dpr;
  s.descriptor_ = "dpr";
  return s;
}

Signature Signature::nat() {
  Signature s;
  s.kind_ = Kind::Nat;
  s.descriptor_ = "dseq";
  return s;
}

Signature Signature::integers() {
  Signature s;
  s.kind_ = Kind::Int;
  s.descriptor_ = "dz";
  return s;
}

Signature Signature::from_pairs(std::vector<Symbol> letters,
                                std::vector<std::pair<Symbol, Symbol>> succ) {
  Signature s;
  s.kind_ = Kind::Table;
  s.descriptor_ = "table";
  s.letters_ = std::move(letters);
  for (std::size_t i = 0; i < s.letters_.size(); ++i) {
    for (std::size_t j = i + 1; j < s.letters_.size(); ++j)
      if (s.letters_[i] == s.letters_[j])
        throw ConfigError("signature: duplicate letter " + s.letters_[i]);
  }
  for (auto& [from, to] : succ) {
    if (!s.has_letter(from) || !s.has_letter(to))
      throw ConfigError("signature: successor pair uses unknown letter");
    if (s.next_.count(from))
      throw ConfigError("signature: letter " + from + " has two successors");
    if (s.prev_.count(to))
      throw ConfigError("signature: letter " + to +
                        " succeeds two different letters");
    s.next_[from] = to;
    s.prev_[to] = from;
  }
  for (const Symbol& start : s.letters_) {
    Symbol cur = start;
    for (std::size_t steps = 0; steps < s.letters_.size(); ++steps) {
      auto it = s.next_.find(cur);
      if (it == s.next_.end()) break;
      cur = it->second;
      if (cur == start)
        throw ConfigError("signature: successor map has a cycle through " +
                          start);
    }
  }
  return s;
}

Signature Signature::adjoin_dual(std::vector<Symbol> letters, const Symbol& j) {
  if (std::find(letters.begin(), letters.end(), j) == letters.end())
    throw ConfigError("signature: dualized letter " + j +
                      " is not in the alphabet");
  Symbol dual = j + "^";
  if (std::find(letters.begin(), letters.end(), dual) != letters.end())
    throw ConfigError("signature: alphabet already contains " + dual);
  std::string desc = "cjv:";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) desc += ',';
    desc += letters[i];
  }
  desc += ':';
  desc += j;
  std::vector<Symbol> all = std::move(letters);
  all.push_back(dual);
  Signature s = from_pairs(std::move(all), {{j, dual}});
  s.descriptor_ = desc;
  return s;
}

Signature Signature::parse_descriptor(const std::string& text) {
  if (text == "dpr") return dpr();
  if (text == "dseq") return nat();
  if (text == "dz") return integers();
  if (text.rfind("cjv:", 0) == 0) {
    auto parts = split(text, ':');
    if (parts.size() != 3 || parts[1].empty() || parts[2].empty())
      throw ConfigError("signature: expected cjv:<letters>:<letter>");
    std::vector<Symbol> letters = split(parts[1], ',');
    for (const Symbol& l : letters)
      if (l.empty()) throw ConfigError("signature: empty letter in " + text);
    return adjoin_dual(std::move(letters), parts[2]);
  }
  throw ConfigError("signature: unknown descriptor " + text);
}

bool Signature::has_letter(const Symbol& s) const {
  switch (kind_) {
    case Kind::Dpr:
      return s == "-" || s == "+";
    case Kind::Nat:
      return is_decimal(s, false);
    case Kind::Int:
      return is_decimal(s, true);
    case Kind::Table:
      return std::find(letters_.begin(), letters_.end(), s) != letters_.end();
  }
  return false;
}

std::optional<Symbol> Signature::next(const Symbol& s) const {
  if (!has_letter(s)) return std::nullopt;
  switch (kind_) {
    case Kind::Dpr:
      if (s == "-") return Symbol("+");
      return std::nullopt;
    case Kind::Nat:
    case Kind::Int:
      return shift(s, 1);
    case Kind::Table: {
      auto it = next_.find(s);
      if (it == next_.end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

std::optional<Symbol> Signature::prev(const Symbol& s) const {
  if (!has_letter(s)) return std::nullopt;
  switch (kind_) {
    case Kind::Dpr:
      if (s == "+") return Symbol("-");
      return std::nullopt;
    case Kind::Nat:
      if (s == "0") return std::nullopt;
      return shift(s, -1);
    case Kind::Int:
      return shift(s, -1);
    case Kind::Table: {
      auto it = prev_.find(s);
      if (it == prev_.end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

Word Signature::parse_word(const std::string& text) const {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.push_back(tok);
  if (kind_ == Kind::Dpr && w.size() == 1 && !has_letter(w[0])) {
    Word chars;
    for (char c : w[0]) chars.push_back(std::string(1, c));
    w = std::move(chars);
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!has_letter(w[i]))
      throw ConfigError("word: token " + std::to_string(i + 1) + " is '" +
                        w[i] + "', expected a letter of " + descriptor_);
  return w;
}

std::string Signature::print_word(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && kind_ != Kind::Dpr) out += ' ';
    out += w[i];
  }
  return out;
}

}  // namespace dualcat
