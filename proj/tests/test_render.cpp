#include <string>

#include "doctest.h"
#include "dualcat/render.hpp"

using namespace dualcat;

namespace {

int count_of(const std::string& text, const std::string& needle) {
  int k = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++k;
  return k;
}

}  // namespace

TEST_CASE("text picture of plain strands") {
  std::string pic = render_ascii(to_matching(identity(MarkedWord("-+"))));
  CHECK(pic == "- +\n^ v\n- +\n");
}

TEST_CASE("text picture of arcs") {
  CHECK(render_ascii(to_matching(counit(1))) == "\n/>\\\n- +\n");
  CHECK(render_ascii(to_matching(unit(1))) == "+ -\n\\>/\n\n");
  std::string nested = render_ascii(to_matching(counit(2)));
  CHECK(nested == "\n/__>__\\\n| />\\ |\n- - + +\n");
}

TEST_CASE("text picture of a mixed morphism") {
  DiagMorphism f(MarkedWord("--+++-+-"), MarkedWord("+++---"),
                 PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  std::string pic = render_ascii(to_matching(f));
  CHECK(count_of(pic, "\n") >= 4);
  CHECK(pic.find("+ + + - - -") != std::string::npos);
  CHECK(pic.find("- - + + + - + -") != std::string::npos);
  CHECK(render_ascii(to_matching(identity(MarkedWord()))) == "\n\n");
}

TEST_CASE("svg output") {
  DiagMorphism f(MarkedWord("--+++-+-"), MarkedWord("+++---"),
                 PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  std::string svg = render_svg(to_matching(f));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<line") == 2);    // two through strands
  CHECK(count_of(svg, "<path") == 5);    // three cups and two caps
  CHECK(count_of(svg, "<polygon") == 7); // one arrow per strand
  CHECK(count_of(svg, "<text") == 14);   // one label per letter
  CHECK(svg.find("</svg>") != std::string::npos);
  std::string empty = render_svg(to_matching(identity(MarkedWord())));
  CHECK(empty.rfind("<svg", 0) == 0);
}
