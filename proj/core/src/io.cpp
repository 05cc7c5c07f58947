#include "dualcat/io.hpp"

#include <utility>

#include "json.hpp"

namespace dualcat {

namespace {

using nlohmann::json;

json word_to_json(const MarkedWord& w) {
  return json{{"len", w.length()}, {"plus", w.marks().elements()}};
}

MarkedWord word_from_json(const json& j) {
  return MarkedWord(j.at("len").get<int>(),
                    j.at("plus").get<std::vector<int>>());
}

}  // namespace

std::string morphism_to_json(const DiagMorphism& f) {
  json out{{"dom", word_to_json(f.dom())},
           {"cod", word_to_json(f.cod())},
           {"A", f.dom_through().elements()},
           {"B", f.cod_through().elements()}};
  return out.dump();
}

DiagMorphism morphism_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    MarkedWord dom = word_from_json(j.at("dom"));
    MarkedWord cod = word_from_json(j.at("cod"));
    PosSet A(dom.length(), j.at("A").get<std::vector<int>>());
    PosSet B(cod.length(), j.at("B").get<std::vector<int>>());
    return DiagMorphism(std::move(dom), std::move(cod), std::move(A),
                        std::move(B));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("morphism JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("morphism JSON: ") + e.what());
  }
}

std::string sig_morphism_to_json(const SigMorphism& f) {
  json out{{"sig", f.sig().descriptor()},
           {"dom", f.dom()},
           {"cod", f.cod()},
           {"A", f.dom_through().elements()},
           {"B", f.cod_through().elements()}};
  return out.dump();
}

SigMorphism sig_morphism_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    Signature sig = Signature::parse_descriptor(j.at("sig").get<std::string>());
    Word dom = j.at("dom").get<Word>();
    Word cod = j.at("cod").get<Word>();
    PosSet A(static_cast<int>(dom.size()),
             j.at("A").get<std::vector<int>>());
    PosSet B(static_cast<int>(cod.size()),
             j.at("B").get<std::vector<int>>());
    return SigMorphism(std::move(sig), std::move(dom), std::move(cod),
                       std::move(A), std::move(B));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("morphism JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("morphism JSON: ") + e.what());
  }
}

std::string report_to_json(const CheckReport& r) {
  json out{{"claim", r.claim},
           {"instance", r.instance},
           {"expected", r.expected},
           {"actual", r.actual},
           {"pass", r.pass}};
  return out.dump();
}

}  // namespace dualcat
