#include <sstream>

#include "uqsl/tangle.hpp"

namespace uqsl {

namespace {

std::vector<KnotEntry> build_db() {
  std::vector<KnotEntry> db;
  auto add = [&](std::string name, long strands, std::vector<long> word,
                 const char* expected, bool mirrored) {
    KnotEntry e;
    e.name = std::move(name);
    e.strands = strands;
    e.word = std::move(word);
    if (expected) e.expected = LaurentInt::parse(expected);
    e.mirrored = mirrored;
    db.push_back(std::move(e));
  };
  // Braid words from the standard knot tables, oriented entry by entry so
  // that the stored word reproduces the reference polynomial exactly
  // (`mirrored` records when that orientation is the mirror of the usual
  // table chirality).
  add("unknot", 1, {}, "1", false);
  add("2_1^2", 2, {1, 1}, "-2*q-2", false);
  add("3_1", 2, {1, 1, 1}, "2*q^2+4*q+3", false);
  add("4_1", 3, {1, -2, 1, -2}, "6*q+13+6*q^-1", false);
  add("4_1^2", 2, {1, 1, 1, 1}, "-2*q^3-4*q^2-6*q-4", false);
  add("5_1", 2, {1, 1, 1, 1, 1}, "2*q^4+4*q^3+6*q^2+8*q+5", false);
  add("5_2", 3, {1, 1, 1, 2, -1, 2}, "2*q^3+14*q^2+22*q+11", true);
  add("6_1", 4, {1, 1, 2, -1, -3, 2, -3}, "6*q^2+26*q+35+14*q^-1", true);
  add("6_2", 3, {1, 1, 1, -2, 1, -2}, "6*q^3+22*q^2+40*q+39+14*q^-1", false);
  add("6_3", 3, {1, 1, -2, 1, -2, -2}, "10*q^2+42*q+65+42*q^-1+10*q^-2", false);
  add("6_1^2", 2, {1, 1, 1, 1, 1, 1}, "-2*q^5-4*q^4-6*q^3-8*q^2-10*q-6", false);
  add("7_1", 2, {1, 1, 1, 1, 1, 1, 1},
      "2*q^6+4*q^5+6*q^4+8*q^3+10*q^2+12*q+7", false);
  add("7_2", 4, {1, 1, 1, 2, -1, 2, 3, -2, 3}, "2*q^4+14*q^3+40*q^2+46*q+19",
      true);
  add("7_3", 3, {1, 1, 1, 1, 1, 2, -1, 2}, "2*q^5+14*q^4+32*q^3+50*q^2+50*q+21",
      false);
  add("7_4", 4, {1, 1, 2, -1, 2, 2, 3, -2, 3}, "2*q^4+24*q^3+76*q^2+88*q+35",
      true);
  add("7_5", 3, {1, 1, 1, 1, 2, -1, 2, 2}, "2*q^5+20*q^4+60*q^3+96*q^2+82*q+29",
      false);
  add("7_6", 4, {1, 3, -2, 3, 1, 1, -2}, "16*q^3+76*q^2+134*q+105+30*q^-1",
      true);
  add("7_7", 4, {-1, -3, 2, -3, 2, -1, 2}, "18*q^2+96*q+171+124*q^-1+32*q^-2",
      false);
  add("10_132", 4, {1, -3, 2, -3, -3, -2, -1, -1, -2, 1, 1},
      "4*q^2+4*q-3+10*q^-2+8*q^-3+2*q^-4", false);
  // The LL_2 family is specified only through drawings; its values are
  // recorded as expected-but-unconfirmed, with no validated presentation.
  {
    KnotEntry e;
    e.name = "LL2_1";
    e.expected = LaurentInt::parse(
        "2*q^7+4*q^6-2*q^5-6*q^4-4*q^3+4*q+4-2*q^-2");
    e.confirmed = false;
    db.push_back(e);
  }
  {
    KnotEntry e;
    e.name = "LL2_2";
    e.expected = LaurentInt::parse(
        "16*q^8+60*q^7+98*q^6+124*q^5+168*q^4+154*q^3-36*q^2-210*q-198"
        "-300*q^-1-426*q^-2-226*q^-3+80*q^-4+258*q^-5+268*q^-6+140*q^-7"
        "+30*q^-8");
    e.confirmed = false;
    db.push_back(e);
  }
  return db;
}

}  // namespace

const std::vector<KnotEntry>& knot_db() {
  static const std::vector<KnotEntry> db = build_db();
  return db;
}

const KnotEntry& knot_db(const std::string& name) {
  for (auto& e : knot_db())
    if (e.name == name) return e;
  throw tangle_error("unknown knot: " + name);
}

KnotEntry knot_entry(const std::string& name) {
  if (name == "hopf") return knot_db("2_1^2");
  if (name == "solomon") return knot_db("4_1^2");
  if (name.rfind("T(2,", 0) == 0 && name.back() == ')') {
    long b = 0;
    try {
      b = std::stol(name.substr(4, name.size() - 5));
    } catch (...) {
      throw tangle_error("unknown knot: " + name);
    }
    if (b == 0) throw tangle_error("torus parameter must be nonzero");
    KnotEntry e;
    e.name = name;
    e.strands = 2;
    e.word = torus_braid(b).word;
    e.expected = torus2_formula(-b);
    return e;
  }
  return knot_db(name);
}

std::string knot_db_json() {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto& e : knot_db()) {
    if (!first) os << ",\n ";
    first = false;
    os << "{\"name\":\"" << e.name << "\",\"strands\":" << e.strands
       << ",\"word\":[";
    for (size_t i = 0; i < e.word.size(); ++i) os << (i ? "," : "") << e.word[i];
    os << "]";
    if (e.expected) os << ",\"expected\":\"" << e.expected->str() << "\"";
    os << ",\"mirrored\":" << (e.mirrored ? "true" : "false")
       << ",\"confirmed\":" << (e.confirmed ? "true" : "false") << "}";
  }
  os << "]";
  return os.str();
}

}  // namespace uqsl
