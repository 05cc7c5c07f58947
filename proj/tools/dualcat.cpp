#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dualcat/delta.hpp"
#include "dualcat/dpr.hpp"
#include "dualcat/eval.hpp"
#include "dualcat/homs.hpp"
#include "dualcat/io.hpp"
#include "dualcat/matching.hpp"
#include "dualcat/random.hpp"
#include "dualcat/render.hpp"
#include "dualcat/sigcat.hpp"

using namespace dualcat;

namespace {

using AnyMorph = std::variant<DiagMorphism, SigMorphism>;

// Option storage shared by value with each subcommand callback.
struct Opts {
  std::string input, second, sig = "dpr", dom, cod, A, B, map, code, word;
  std::string format, out, claim;
  int bound = -1, dim = 2, n = -1, trials = 100;
  unsigned seed = 0;
};

// Morphism arguments are file paths, except that anything starting with '{'
// is taken as inline JSON.
std::string slurp(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw ConfigError("cannot read " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AnyMorph load_morphism(const std::string& arg) {
  std::string text = slurp(arg);
  // The two layouts are told apart by the signature field, which the
  // '-'/'+' format never contains.
  if (text.find("\"sig\"") != std::string::npos)
    return sig_morphism_from_json(text);
  return morphism_from_json(text);
}

DiagMorphism as_diag(const AnyMorph& m, const std::string& op) {
  if (const auto* d = std::get_if<DiagMorphism>(&m)) return *d;
  const auto& s = std::get<SigMorphism>(m);
  if (s.sig().kind() != Signature::Kind::Dpr)
    throw ConfigError(op + ": only '-'/'+' morphisms are supported here");
  return from_sig(s);
}

std::string show_word(const std::string& printed) {
  return printed.empty() ? "(unit)" : printed;
}

std::string show_set(const PosSet& s) {
  std::string out;
  for (int p : s.elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
  }
  return out;
}

struct MorphView {
  std::string sig, dom, cod;
  const PosSet *A = nullptr, *B = nullptr;
};

MorphView view(const AnyMorph& m) {
  MorphView v;
  if (const auto* d = std::get_if<DiagMorphism>(&m)) {
    v.sig = "dpr";
    v.dom = d->dom().str();
    v.cod = d->cod().str();
    v.A = &d->dom_through();
    v.B = &d->cod_through();
  } else {
    const auto& s = std::get<SigMorphism>(m);
    v.sig = s.sig().descriptor();
    v.dom = s.sig().print_word(s.dom());
    v.cod = s.sig().print_word(s.cod());
    v.A = &s.dom_through();
    v.B = &s.cod_through();
  }
  return v;
}

std::string endpoints(const AnyMorph& m) {
  MorphView v = view(m);
  return show_word(v.dom) + " -> " + show_word(v.cod);
}

std::string morph_text(const AnyMorph& m) {
  MorphView v = view(m);
  std::ostringstream out;
  out << "sig: " << v.sig << "\n"
      << "dom: " << show_word(v.dom) << "\n"
      << "cod: " << show_word(v.cod) << "\n"
      << "A: " << show_set(*v.A) << "\n"
      << "B: " << show_set(*v.B);
  return out.str();
}

std::string morph_json(const AnyMorph& m) {
  if (const auto* d = std::get_if<DiagMorphism>(&m))
    return morphism_to_json(*d);
  return sig_morphism_to_json(std::get<SigMorphism>(m));
}

std::string morph_out(const AnyMorph& m, const std::string& format,
                      const std::string& op) {
  if (format == "text") return morph_text(m);
  if (format == "svg") return render_svg(to_matching(as_diag(m, op)));
  return morph_json(m);
}

std::string one_line(const AnyMorph& m) {
  MorphView v = view(m);
  std::ostringstream out;
  out << show_word(v.dom) << " -> " << show_word(v.cod) << "  A: "
      << show_set(*v.A) << "  B: " << show_set(*v.B);
  return out.str();
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  std::size_t i = 0;
  while (in >> tok) {
    ++i;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ConfigError(what + ": token " + std::to_string(i) + " is '" +
                        tok + "', expected an integer");
    out.push_back(v);
  }
  return out;
}

PosSet make_set(int ambient, const std::vector<int>& vals,
                const std::string& what) {
  std::set<int> seen;
  for (int v : vals) {
    if (v < 1 || v > ambient)
      throw ConfigError(what + ": position " + std::to_string(v) +
                        " is outside 1.." + std::to_string(ambient));
    if (!seen.insert(v).second)
      throw ConfigError(what + ": position " + std::to_string(v) +
                        " repeats");
  }
  return PosSet(ambient, vals);
}

MarkedWord to_marked(const Word& w) {
  std::vector<int> plus;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == "+") plus.push_back(static_cast<int>(i) + 1);
  return MarkedWord(static_cast<int>(w.size()), std::move(plus));
}

void emit(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << payload;
  if (!payload.empty() && payload.back() != '\n') out << '\n';
}

std::string report_line(const CheckReport& r) {
  std::string head = r.pass ? "PASS" : "FAIL";
  return head + "  " + r.claim + " [" + r.instance + "]  expected: " +
         r.expected + "  actual: " + r.actual;
}

void emit_reports(const std::vector<CheckReport>& rs,
                  const std::string& format, int* exit_code) {
  if (format == "json") {
    std::string out = "[";
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i) out += ",";
      out += report_to_json(rs[i]);
    }
    emit(out + "]", "");
  } else {
    std::string out;
    for (const CheckReport& r : rs) {
      if (!out.empty()) out += '\n';
      out += report_line(r);
    }
    emit(out, "");
  }
  for (const CheckReport& r : rs)
    if (!r.pass) *exit_code = 1;
}

// Both triangle composites for every sampled letter with a successor.
std::vector<CheckReport> snake_reports(const Signature& sig) {
  std::vector<Symbol> pool;
  for (const Symbol& s : sample_letters(sig))
    if (sig.next(s)) pool.push_back(s);
  if (pool.empty())
    throw ConfigError("check snake: no letter of " + sig.descriptor() +
                      " has a successor");
  std::vector<CheckReport> out;
  for (const Symbol& y : pool) {
    Symbol t = *sig.next(y);
    SigMorphism idy = sig_identity(sig, {y}), idt = sig_identity(sig, {t});
    SigMorphism eps = sig_counit(sig, {y}), eta = sig_unit(sig, {y});
    SigMorphism left =
        sig_compose(sig_tensor(idy, eta), sig_tensor(eps, idy));
    SigMorphism right =
        sig_compose(sig_tensor(eta, idt), sig_tensor(idt, eps));
    CheckReport r;
    r.claim = "snake composites are identities";
    r.instance = sig.descriptor() + ", letter " + y;
    r.expected = "both identities";
    bool lok = left == idy, rok = right == idt;
    r.actual = lok && rok ? "both identities"
               : lok      ? "the dual-side composite differs"
                          : "the letter-side composite differs";
    r.pass = lok && rok;
    out.push_back(r);
  }
  return out;
}

// Seeded spot checks of the category and monoidal laws.
std::vector<CheckReport> law_reports(const Signature& sig, int trials,
                                     unsigned seed) {
  std::mt19937 rng(seed);
  int assoc = 0, unital = 0, inter = 0;
  for (int i = 0; i < trials; ++i) {
    auto chain = random_sig_chain(rng, sig, 3, 2, 8);
    const auto &f = chain[0], &g = chain[1], &h = chain[2];
    if (sig_compose(sig_compose(f, g), h) !=
        sig_compose(f, sig_compose(g, h)))
      ++assoc;
    if (sig_compose(sig_identity(sig, f.dom()), f) != f ||
        sig_compose(f, sig_identity(sig, f.cod())) != f)
      ++unital;
    auto lhs = random_sig_chain(rng, sig, 2, 2, 6);
    auto rhs = random_sig_chain(rng, sig, 2, 2, 6);
    SigMorphism glued = sig_compose(sig_tensor(lhs[0], rhs[0]),
                                    sig_tensor(lhs[1], rhs[1]));
    SigMorphism split = sig_tensor(sig_compose(lhs[0], lhs[1]),
                                   sig_compose(rhs[0], rhs[1]));
    if (glued != split) ++inter;
  }
  auto mk = [&](const std::string& claim, int fails) {
    CheckReport r;
    r.claim = claim;
    r.instance =
        std::to_string(trials) + " seeded trials over " + sig.descriptor();
    r.expected = "0 failures";
    r.actual = std::to_string(fails) + " failures";
    r.pass = fails == 0;
    return r;
  };
  return {mk("composition is associative", assoc),
          mk("identities are neutral", unital),
          mk("tensor and composition interchange", inter)};
}

void add_validate(CLI::App& app, int* exit_code) {
  auto o = std::make_shared<Opts>();
  o->format = "text";
  auto* cmd = app.add_subcommand(
      "validate", "Check the defining conditions of a morphism");
  cmd->add_option("input", o->input,
                  "morphism JSON, as a file path or inline");
  cmd->add_option("--sig", o->sig, "signature descriptor for inline words");
  cmd->add_option("--dom", o->dom, "domain word");
  cmd->add_option("--cod", o->cod, "codomain word");
  cmd->add_option("--A", o->A, "domain through positions, 1-based");
  cmd->add_option("--B", o->B, "codomain through positions, 1-based");
  cmd->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([o, cmd, exit_code] {
    CheckReport r;
    r.claim = "morphism conditions";
    r.expected = "valid";
    if (!o->input.empty()) {
      try {
        AnyMorph m = load_morphism(o->input);
        r.instance = endpoints(m);
        r.actual = "valid";
        r.pass = true;
      } catch (const ValidationError& e) {
        r.instance = o->input;
        r.actual = e.what();
        r.pass = false;
      }
    } else {
      if (!cmd->count("--dom") || !cmd->count("--cod"))
        throw CLI::ValidationError(
            "validate", "pass a morphism input or --dom and --cod");
      Signature sig = Signature::parse_descriptor(o->sig);
      Word dom = sig.parse_word(o->dom), cod = sig.parse_word(o->cod);
      PosSet A = make_set(static_cast<int>(dom.size()),
                          parse_ints(o->A, "--A"), "--A");
      PosSet B = make_set(static_cast<int>(cod.size()),
                          parse_ints(o->B, "--B"), "--B");
      ValidationResult res = SigMorphism::check(sig, dom, cod, A, B);
      r.instance = show_word(sig.print_word(dom)) + " -> " +
                   show_word(sig.print_word(cod));
      r.actual = res.ok ? "valid" : res.message;
      r.pass = res.ok;
    }
    if (o->format == "json")
      emit(report_to_json(r), "");
    else
      emit(r.pass ? std::string("valid") : "invalid: " + r.actual, "");
    if (!r.pass) *exit_code = 1;
  });
}

void add_binary_op(CLI::App& app, bool composing) {
  auto o = std::make_shared<Opts>();
  o->format = "json";
  auto* cmd = app.add_subcommand(
      composing ? "compose" : "tensor",
      composing ? "Compose two morphisms, first argument first"
                : "Tensor two morphisms side by side");
  cmd->add_option("f", o->input, "first morphism, file path or inline JSON")
      ->required();
  cmd->add_option("g", o->second, "second morphism, file path or inline JSON")
      ->required();
  cmd->add_option("--format", o->format, "text, json, or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  cmd->callback([o, composing] {
    AnyMorph f = load_morphism(o->input), g = load_morphism(o->second);
    AnyMorph h = [&]() -> AnyMorph {
      if (std::holds_alternative<DiagMorphism>(f) &&
          std::holds_alternative<DiagMorphism>(g)) {
        const auto &a = std::get<DiagMorphism>(f), &b = std::get<DiagMorphism>(g);
        return composing ? compose(a, b) : tensor(a, b);
      }
      auto lift = [](const AnyMorph& m) {
        if (const auto* d = std::get_if<DiagMorphism>(&m)) return to_sig(*d);
        return std::get<SigMorphism>(m);
      };
      SigMorphism a = lift(f), b = lift(g);
      return composing ? sig_compose(a, b) : sig_tensor(a, b);
    }();
    emit(morph_out(h, o->format, composing ? "compose" : "tensor"), "");
  });
}

void add_decompose(CLI::App& app) {
  auto o = std::make_shared<Opts>();
  o->format = "text";
  auto* cmd = app.add_subcommand(
      "decompose",
      "Split a morphism into its alternating invertible and elementary "
      "tensor factors");
  cmd->add_option("input", o->input, "morphism, file path or inline JSON")
      ->required();
  cmd->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([o] {
    AnyMorph m = load_morphism(o->input);
    std::vector<AnyMorph> factors;
    if (const auto* d = std::get_if<DiagMorphism>(&m)) {
      for (DiagMorphism& f : decompose(*d)) factors.emplace_back(std::move(f));
    } else {
      for (SigMorphism& f : sig_decompose(std::get<SigMorphism>(m)))
        factors.emplace_back(std::move(f));
    }
    if (o->format == "json") {
      std::string out = "[";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ",";
        out += morph_json(factors[i]);
      }
      emit(out + "]", "");
      return;
    }
    std::ostringstream out;
    out << factors.size() << " factors";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      bool invertible =
          i % 2 == 0;  // the alternation starts and ends invertible
      out << "\nfactor " << i + 1 << " "
          << (invertible ? "invertible" : "elementary") << ": "
          << one_line(factors[i]);
    }
    emit(out.str(), "");
  });
}

void add_theta(CLI::App& app) {
  auto o = std::make_shared<Opts>();
  o->format = "json";
  auto* cmd = app.add_subcommand(
      "theta",
      "Embed a monotone map between finite ordinals as a morphism between "
      "alternating words, or read the map back off such a morphism");
  cmd->add_option("input", o->input,
                  "morphism between alternating words to invert");
  cmd->add_option("--map", o->map, "map values, e.g. \"0 0 1 2\"");
  cmd->add_option("--n", o->n,
                  "codomain size; defaults to one past the largest value");
  cmd->add_option("--format", o->format, "text, json, or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  cmd->callback([o, cmd] {
    bool have_map = cmd->count("--map") > 0;
    if (have_map == !o->input.empty())
      throw CLI::ValidationError("theta",
                                 "pass exactly one of --map or a morphism");
    if (have_map) {
      std::vector<int> values = parse_ints(o->map, "--map");
      int n = o->n >= 0 ? o->n
              : values.empty()
                  ? 0
                  : *std::max_element(values.begin(), values.end()) + 1;
      SimplicialMap xi(n, values);
      emit(morph_out(AnyMorph(to_morphism(xi)), o->format, "theta"), "");
      return;
    }
    SimplicialMap xi = from_morphism(as_diag(load_morphism(o->input), "theta"));
    if (o->format == "json") {
      nlohmann::json j{{"n", xi.n()}, {"map", xi.values()}};
      emit(j.dump(), "");
    } else {
      std::ostringstream out;
      out << "n: " << xi.n() << "\nmap:";
      for (int v : xi.values()) out << ' ' << v;
      emit(out.str(), "");
    }
  });
}

void add_eval(CLI::App& app) {
  auto o = std::make_shared<Opts>();
  o->format = "text";
  auto* cmd = app.add_subcommand(
      "eval",
      "Evaluate a '-'/'+' morphism as an integer matrix, sending both "
      "letters to a space of the chosen dimension");
  cmd->add_option("input", o->input, "morphism, file path or inline JSON")
      ->required();
  cmd->add_option("--dim", o->dim, "dimension of the dual pair")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([o] {
    DualPairTarget target = DualPairTarget::matrix_pair(o->dim);
    AnyMorph m = load_morphism(o->input);
    IntMatrix out = [&] {
      if (const auto* d = std::get_if<DiagMorphism>(&m))
        return evaluate(target, *d);
      return evaluate(target, std::get<SigMorphism>(m));
    }();
    if (o->format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < out.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < out.cols(); ++c) row.push_back(out.at(r, c));
        rows.push_back(row);
      }
      nlohmann::json j{
          {"rows", out.rows()}, {"cols", out.cols()}, {"entries", rows}};
      emit(j.dump(), "");
      return;
    }
    std::ostringstream text;
    for (int r = 0; r < out.rows(); ++r) {
      if (r) text << '\n';
      for (int c = 0; c < out.cols(); ++c) {
        if (c) text << ' ';
        text << out.at(r, c);
      }
    }
    emit(out.rows() == 0 || out.cols() == 0 ? "(empty matrix)" : text.str(),
         "");
  });
}

void add_count(CLI::App& app) {
  auto o = std::make_shared<Opts>();
  o->format = "text";
  o->bound = 16;
  auto* cmd = app.add_subcommand(
      "count", "Count all morphisms between two words by enumeration");
  cmd->add_option("--sig", o->sig, "signature descriptor");
  cmd->add_option("--dom", o->dom, "domain word");
  cmd->add_option("--cod", o->cod, "codomain word");
  cmd->add_option("--bound", o->bound,
                  "largest total endpoint count the enumeration accepts");
  cmd->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([o] {
    Signature sig = Signature::parse_descriptor(o->sig);
    Word dom = sig.parse_word(o->dom), cod = sig.parse_word(o->cod);
    HomSet homs = enumerate_homs(sig, dom, cod, o->bound);
    std::size_t n = homs.morphisms.size();
    if (o->format == "json") {
      nlohmann::json j{{"sig", sig.descriptor()},
                       {"dom", sig.print_word(dom)},
                       {"cod", sig.print_word(cod)},
                       {"count", n}};
      emit(j.dump(), "");
    } else {
      emit(std::to_string(n), "");
    }
  });
}

void add_check(CLI::App& app, int* exit_code) {
  auto o = std::make_shared<Opts>();
  o->format = "text";
  auto* cmd = app.add_subcommand(
      "check", "Run one of the built-in verified claims and report the "
               "verdict");
  cmd->add_option("claim", o->claim,
                  "snake: triangle identities; laws: seeded category and "
                  "monoidal laws; omega: dual-free hom sets after adjoining "
                  "a dual; zeta: coend presentation of a hom set")
      ->required()
      ->check(CLI::IsMember({"snake", "laws", "omega", "zeta"}));
  cmd->add_option("--sig", o->sig, "signature descriptor");
  cmd->add_option("--dom", o->dom, "left word, for zeta");
  cmd->add_option("--cod", o->cod, "right word, for zeta");
  cmd->add_option("--bound", o->bound,
                  "word-length bound for omega, middle bound for zeta");
  cmd->add_option("--trials", o->trials, "trial count for laws");
  cmd->add_option("--seed", o->seed, "random seed for laws");
  cmd->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([o, exit_code] {
    Signature sig = Signature::parse_descriptor(o->sig);
    std::vector<CheckReport> rs;
    if (o->claim == "snake") {
      rs = snake_reports(sig);
    } else if (o->claim == "laws") {
      rs = law_reports(sig, o->trials, o->seed);
    } else if (o->claim == "omega") {
      rs = {check_omega_ff(sig, o->bound > 0 ? o->bound : 8)};
    } else {
      Word U = sig.parse_word(o->dom), V = sig.parse_word(o->cod);
      rs = {check_zeta_bijective(sig, U, V, o->bound).summary};
    }
    emit_reports(rs, o->format, exit_code);
  });
}

void add_render(CLI::App& app) {
  auto o = std::make_shared<Opts>();
  o->format = "text";
  auto* cmd = app.add_subcommand(
      "render", "Draw a '-'/'+' morphism as strands, cups, and caps");
  cmd->add_option("input", o->input, "morphism, file path or inline JSON")
      ->required();
  cmd->add_option("--format", o->format, "text or svg")
      ->check(CLI::IsMember({"text", "svg"}));
  cmd->add_option("-o,--out", o->out, "write to a file instead of stdout");
  cmd->callback([o] {
    Matching mt = to_matching(as_diag(load_morphism(o->input), "render"));
    emit(o->format == "svg" ? render_svg(mt) : render_ascii(mt), o->out);
  });
}

void add_tree(CLI::App& app) {
  auto o = std::make_shared<Opts>();
  o->format = "text";
  auto* cmd = app.add_subcommand(
      "tree",
      "Translate between '-'/'+' words and their branch-count sequences, "
      "the codes of plane rooted trees of height two");
  cmd->add_option("--word", o->word, "word to encode");
  cmd->add_option("--code", o->code, "code to decode, e.g. \"2 0 0\"");
  cmd->add_option("--format", o->format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->callback([o, cmd] {
    bool have_word = cmd->count("--word") > 0;
    bool have_code = cmd->count("--code") > 0;
    if (have_word == have_code)
      throw CLI::ValidationError("tree",
                                 "pass exactly one of --word or --code");
    if (have_word) {
      Word w = Signature::dpr().parse_word(o->word);
      std::vector<int> code = word_to_tree(to_marked(w));
      if (o->format == "json") {
        emit(nlohmann::json(code).dump(), "");
      } else {
        std::ostringstream out;
        for (std::size_t i = 0; i < code.size(); ++i) {
          if (i) out << ' ';
          out << code[i];
        }
        emit(out.str(), "");
      }
      return;
    }
    MarkedWord w = tree_to_word(parse_ints(o->code, "--code"));
    emit(o->format == "json" ? nlohmann::json(w.str()).dump()
                             : show_word(w.str()),
         "");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Morphisms of words with freely adjoined duals: validate, compose, "
      "tensor, decompose, embed monotone maps, evaluate to matrices, count "
      "hom sets, run verified claims, and draw diagrams"};
  app.require_subcommand(1);
  int exit_code = 0;
  add_validate(app, &exit_code);
  add_binary_op(app, true);
  add_binary_op(app, false);
  add_decompose(app);
  add_theta(app);
  add_eval(app);
  add_count(app);
  add_check(app, &exit_code);
  add_render(app);
  add_tree(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
