#include "uqsl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "uqsl/classify.hpp"
#include "uqsl/tangle.hpp"

namespace uqsl {

namespace {

using nlohmann::json;

long default_N() {
  if (const char* env = std::getenv("UQSL_DEFAULT_N")) {
    try {
      return std::stol(env);
    } catch (...) {
      throw validation_error("UQSL_DEFAULT_N is not an integer");
    }
  }
  return 8;
}

std::pair<long, long> parse_label(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw validation_error("expected a label of the form i,j");
  try {
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
  } catch (...) {
    throw validation_error("expected a label of the form i,j");
  }
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stol(item));
    } catch (...) {
      throw validation_error("expected a comma-separated integer list");
    }
  }
  return out;
}

json character_json(const GradedCharacter& ch) {
  json arr = json::array();
  for (auto& [k, mult] : ch)
    arr.push_back({{"w1", k.w1}, {"w2", k.w2}, {"zdeg", k.d}, {"mult", mult}});
  return arr;
}

json factors_json(const std::vector<CompositionFactor>& fs) {
  json arr = json::array();
  for (auto& f : fs) arr.push_back({{"i", f.i}, {"j", f.j}, {"shift", f.shift}});
  return arr;
}

void print_character_text(std::ostream& out, const GradedCharacter& ch) {
  for (auto& [k, mult] : ch)
    out << "  weight (" << k.w1 << "," << k.w2 << ")  t^" << k.d << "  x"
        << mult << "\n";
}

const CModule& named_module(long N, const std::string& kind, long i, long j) {
  if (kind == "simple") return simple_module_cached(N, i, j);
  if (kind == "standard") return standard_module_cached(N, i, j);
  throw validation_error("unknown module kind " + kind);
}

template <class S>
void print_matrix(std::ostream& out, const Matrix<S>& m, const std::string& fmt) {
  if (fmt == "latex") {
    out << "\\begin{pmatrix}\n";
    for (size_t r = 0; r < m.rows(); ++r) {
      for (size_t c = 0; c < m.cols(); ++c)
        out << m.at(r, c).str() << (c + 1 < m.cols() ? " & " : "");
      out << (r + 1 < m.rows() ? " \\\\" : "") << "\n";
    }
    out << "\\end{pmatrix}\n";
  } else if (fmt == "json") {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
      rows.push_back(row);
    }
    out << rows.dump() << "\n";
  } else {
    for (size_t r = 0; r < m.rows(); ++r) {
      for (size_t c = 0; c < m.cols(); ++c)
        out << m.at(r, c).str() << (c + 1 < m.cols() ? "  " : "");
      out << "\n";
    }
  }
}

SModule named_symbolic_module(const std::string& name) {
  if (name == "W") return symbolic_W();
  if (name == "W*") return dual_module(symbolic_W());
  if (name == "L(1,0)" || name == "L10") return symbolic_L10();
  if (name == "L(0,1)" || name == "L01") return symbolic_L01();
  if (name == "1" || name == "trivial") return trivial_module(SymbolicBackend{});
  throw validation_error(
      "unknown symbolic module (use W, W*, L(1,0), L(0,1), trivial)");
}

int do_classify(long r, std::vector<long> J, long N, const std::string& fmt,
                std::ostream& out) {
  SuperAData d = build_super_a(r, J, N);
  ClassificationReport rep = classify_all(d);
  out << (fmt == "json" ? report_json(d, rep) : report_text(d, rep));
  if (fmt == "json") out << "\n";
  return 0;
}

int do_module(const std::string& kind, long i, long j, long N,
              const std::string& fmt, std::ostream& out) {
  const CModule& L = named_module(N, kind, i, j);
  GradedCharacter ch = graded_character(L);
  CycloScalar qd = qdim(L);
  if (fmt == "json") {
    json o{{"type", kind}, {"i", i},           {"j", j},
           {"N", N},       {"dim", L.dim()},   {"qdim", qd.str()},
           {"character", character_json(ch)}};
    out << o.dump() << "\n";
  } else {
    out << kind << "(" << i << "," << j << ")  N=" << N << "\n";
    out << "dim:  " << L.dim() << "\n";
    out << "qdim: " << qd.str() << "\n";
    out << "character:\n";
    print_character_text(out, ch);
  }
  return 0;
}

int do_tensor(const std::string& kind_a, long ia, long ja,
              const std::string& kind_b, long ib, long jb, long N,
              const std::string& fmt, std::ostream& out) {
  const CModule& A = named_module(N, kind_a, ia, ja);
  const CModule& B = named_module(N, kind_b, ib, jb);
  auto factors = composition_factors(tensor(A, B));
  if (fmt == "json") {
    json o{{"a", {{"type", kind_a}, {"i", ia}, {"j", ja}}},
           {"b", {{"type", kind_b}, {"i", ib}, {"j", jb}}},
           {"N", N},
           {"factors", factors_json(factors)}};
    out << o.dump() << "\n";
  } else {
    for (auto& f : factors) {
      out << "L(" << f.i << "," << f.j << ")";
      if (f.shift) out << " t^" << f.shift;
      out << "\n";
    }
  }
  return 0;
}

int do_grothendieck(long ia, long ja, long ib, long jb, long N,
                    const std::string& fmt, std::ostream& out) {
  LCombo a{{{ia, ja, 0}, 1}}, b{{{ib, jb, 0}, 1}};
  LCombo p = grothendieck_product(a, b, N);
  if (fmt == "json") {
    json terms = json::array();
    for (auto& [key, mult] : p) {
      auto [i, j, shift] = key;
      terms.push_back({{"i", i}, {"j", j}, {"shift", shift}, {"mult", mult}});
    }
    json o{{"product",
            "l" + std::to_string(ia) + std::to_string(ja) + "*l" +
                std::to_string(ib) + std::to_string(jb)},
           {"N", N},
           {"terms", terms}};
    out << o.dump() << "\n";
  } else {
    out << l_combo_str(p) << "\n";
  }
  return 0;
}

int do_rmatrix(const std::string& m1, const std::string& m2, bool twist_only,
               const std::string& backend, long N, const std::string& fmt,
               std::ostream& out) {
  if (backend == "symbolic") {
    SModule A = named_symbolic_module(m1);
    if (twist_only) {
      print_matrix(out, twist(A, 6), fmt);
      return 0;
    }
    SModule B = named_symbolic_module(m2);
    print_matrix(out, r_matrix_braiding(A, B, 6), fmt);
  } else {
    auto parse_lm = [&](const std::string& s) -> CModule {
      if (s == "W") return canonical_W(N);
      if (s.size() > 2 && (s[0] == 'L' || s[0] == 'M')) {
        auto lbl = parse_label(s.substr(2, s.size() - 3));
        return s[0] == 'L' ? simple_module(N, lbl.first, lbl.second)
                           : standard_module(N, lbl.first, lbl.second);
      }
      throw validation_error("unknown module name " + s);
    };
    CModule A = parse_lm(m1);
    if (twist_only) {
      print_matrix(out, twist(A, N), fmt);
      return 0;
    }
    CModule B = parse_lm(m2);
    print_matrix(out, r_matrix_braiding(A, B, N), fmt);
  }
  return 0;
}

int do_skein(const std::string& fmt, std::ostream& out) {
  SkeinReport rep = skein_verify();
  bool all = rep.cubic_zero && rep.quadratic_zero && rep.idempotent &&
             rep.rank_e == 4 && rep.spectrum_ok && rep.image_ok;
  if (fmt == "json") {
    json o{{"cubic_zero", rep.cubic_zero},
           {"quadratic_zero", rep.quadratic_zero},
           {"idempotent", rep.idempotent},
           {"rank_e", rep.rank_e},
           {"spectrum_ok", rep.spectrum_ok},
           {"image_ok", rep.image_ok}};
    out << o.dump() << "\n";
  } else {
    out << "cubic minimal polynomial:      " << (rep.cubic_zero ? "ok" : "FAIL") << "\n"
        << "quadratic relation with e:     " << (rep.quadratic_zero ? "ok" : "FAIL") << "\n"
        << "e idempotent:                  " << (rep.idempotent ? "ok" : "FAIL") << "\n"
        << "rank of e:                     " << rep.rank_e << "\n"
        << "spectrum in {-1, -q^-1}:       " << (rep.spectrum_ok ? "ok" : "FAIL") << "\n"
        << "e fixes the summand generator: " << (rep.image_ok ? "ok" : "FAIL") << "\n";
  }
  if (!all) throw consistency_error("skein relations failed");
  return 0;
}

int do_invariant(const std::string& knot, const std::string& braid, long strands,
                 long cut, const std::string& tangle_file,
                 const std::string& backend, long N, const std::string& fmt,
                 std::ostream& out) {
  std::string name = knot;
  LaurentInt value;
  BraidSpec spec;
  bool have_braid = false;
  if (!knot.empty()) {
    KnotEntry e = knot_entry(knot);
    spec = braid_of(e);
    have_braid = true;
  } else if (!braid.empty()) {
    spec.word = parse_list(braid);
    spec.strands = strands;
    spec.cut = cut;
    name = "braid";
    have_braid = true;
  } else if (!tangle_file.empty()) {
    std::ifstream in(tangle_file);
    if (!in) throw std::ios_base::failure("cannot open " + tangle_file);
    std::stringstream buf;
    buf << in.rdbuf();
    MorseTangle t;
    try {
      t = parse_tangle_json(buf.str());
    } catch (const nlohmann::json::exception& e) {
      throw std::ios_base::failure(e.what());
    }
    name = tangle_file;
    value = invariant(t);
  } else {
    throw validation_error("one of --knot, --braid, --tangle is required");
  }
  if (have_braid) {
    if (backend == "root-of-unity") {
      CycloScalar v = invariant_cyclo(spec, N);
      if (fmt == "json") {
        json o{{"name", name}, {"braid", spec.word}, {"N", N}, {"invariant", v.str()}};
        out << o.dump() << "\n";
      } else {
        out << v.str() << "\n";
      }
      return 0;
    }
    value = invariant(spec);
  }
  if (fmt == "json") {
    json o{{"name", name}, {"invariant", value.str()}};
    if (have_braid) o["braid"] = spec.word;
    out << o.dump() << "\n";
  } else {
    out << value.str() << "\n";
  }
  return 0;
}

int do_knot_table(const std::string& golden_path, const std::string& fmt,
                  std::ostream& out) {
  // optional golden file overriding the expected values
  std::map<std::string, LaurentInt> golden;
  if (!golden_path.empty()) {
    std::ifstream in(golden_path);
    if (!in) throw std::ios_base::failure("cannot open " + golden_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::ios_base::failure(e.what());
    }
    for (auto& e : j)
      if (e.contains("expected"))
        golden[e.at("name").get<std::string>()] =
            LaurentInt::parse(e.at("expected").get<std::string>());
  }
  struct Row {
    std::string name;
    std::string status;
    std::string value;
    bool ok = true;
  };
  std::vector<std::future<Row>> futs;
  for (auto& e : knot_db()) {
    futs.push_back(std::async(std::launch::async, [&e, &golden] {
      Row row;
      row.name = e.name;
      if (!e.confirmed) {
        row.status = "SKIP (no validated presentation)";
        if (e.expected) row.value = e.expected->str();
        return row;
      }
      LaurentInt v = invariant(braid_of(e));
      row.value = v.str();
      const LaurentInt* expect = nullptr;
      auto it = golden.find(e.name);
      if (it != golden.end())
        expect = &it->second;
      else if (e.expected)
        expect = &*e.expected;
      if (!expect) {
        row.status = "ok (no reference value)";
      } else if (v == *expect) {
        row.status = "ok";
      } else {
        row.status = "MISMATCH (expected " + expect->str() + ")";
        row.ok = false;
      }
      return row;
    }));
  }
  std::vector<Row> rows;
  for (auto& f : futs) rows.push_back(f.get());
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.name < b.name; });
  bool all_ok = true;
  if (fmt == "json") {
    json arr = json::array();
    for (auto& r : rows) {
      arr.push_back({{"name", r.name}, {"invariant", r.value}, {"status", r.status}});
      all_ok = all_ok && r.ok;
    }
    out << arr.dump() << "\n";
  } else {
    for (auto& r : rows) {
      out << r.name << ": " << r.status;
      if (r.status == "ok") out << "  " << r.value;
      out << "\n";
      all_ok = all_ok && r.ok;
    }
  }
  if (!all_ok) throw consistency_error("knot table mismatch");
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact engine for rank-2 quantum groups of type Super A"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string fmt = "text";
  app.add_option("--format", fmt, "output format: text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  long r = 2, N = 0;
  std::string Jstr = "1,2";
  std::string backend;

  auto* c_classify = app.add_subcommand("classify", "classification report");
  c_classify->add_option("--r", r, "rank");
  c_classify->add_option("--J", Jstr, "odd vertices, e.g. 1,2");
  c_classify->add_option("--N", N, "order of q (even, > 2)");

  std::string kind = "simple", kind_b = "simple";
  std::string label_a = "1,0", label_b = "0,1";
  auto* c_module = app.add_subcommand("module", "module data and character");
  c_module->add_option("--simple", label_a, "simple module label i,j");
  c_module->add_option("--standard", label_a, "standard module label i,j");
  c_module->add_option("--N", N, "order of q");

  auto* c_tensor = app.add_subcommand("tensor", "composition factors of a tensor product");
  c_tensor->add_option("--a", label_a, "first label i,j");
  c_tensor->add_option("--b", label_b, "second label i,j");
  bool std_a = false, std_b = false;
  c_tensor->add_flag("--standard-a", std_a, "first factor is a standard module");
  c_tensor->add_flag("--standard-b", std_b, "second factor is a standard module");
  c_tensor->add_option("--N", N, "order of q");

  auto* c_char = app.add_subcommand("character", "graded character");
  c_char->add_option("--simple", label_a, "simple module label i,j");
  c_char->add_option("--standard", label_a, "standard module label i,j");
  c_char->add_option("--N", N, "order of q");

  auto* c_groth = app.add_subcommand("grothendieck", "product in the l-symbol basis");
  c_groth->add_option("--a", label_a, "first symbol i,j");
  c_groth->add_option("--b", label_b, "second symbol i,j");
  c_groth->add_option("--N", N, "order of q");

  std::string m1 = "W", m2 = "W";
  auto* c_rmatrix = app.add_subcommand("rmatrix", "braiding matrix of a module pair");
  c_rmatrix->add_option("--module1", m1, "first module (W, W*, L(1,0), L(0,1), L(i,j), M(i,j))");
  c_rmatrix->add_option("--module2", m2, "second module");
  c_rmatrix->add_option("--backend", backend, "symbolic | root-of-unity");
  c_rmatrix->add_option("--N", N, "order of q (root-of-unity backend)");
  bool twist_only = false;
  c_rmatrix->add_flag("--twist", twist_only, "print the ribbon twist of module1 instead");

  auto* c_skein = app.add_subcommand("skein", "skein relation report for the braiding on W");

  std::string knot, braid, tangle_file;
  long strands = 2, cut = 1;
  auto* c_inv = app.add_subcommand("invariant", "link invariant from the module W");
  c_inv->add_option("--knot", knot, "knot name from the database");
  c_inv->add_option("--braid", braid, "braid word, e.g. 1,1,1");
  c_inv->add_option("--strands", strands, "strand count for --braid");
  c_inv->add_option("--cut", cut, "cut strand (1-based)");
  c_inv->add_option("--tangle", tangle_file, "tangle JSON file");
  c_inv->add_option("--backend", backend, "symbolic | root-of-unity");
  c_inv->add_option("--N", N, "order of q (root-of-unity backend)");

  std::string golden;
  auto* c_table = app.add_subcommand("knot-table", "evaluate the whole table and diff");
  c_table->add_option("--golden", golden, "golden JSON file with expected values");

  std::vector<const char*> argv;
  std::string prog = "uqsl";
  argv.push_back(prog.c_str());
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse((int)argv.size(), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (N == 0) N = default_N();
    if (backend.empty()) backend = c_inv->parsed() ? "symbolic" : "root-of-unity";
    if (backend != "symbolic" && backend != "root-of-unity")
      throw validation_error("unknown backend " + backend);
    if (c_classify->parsed())
      return do_classify(r, parse_list(Jstr), N, fmt, out);
    if (c_module->parsed() || c_char->parsed()) {
      auto* sub = c_module->parsed() ? c_module : c_char;
      if (sub->count("--standard")) kind = "standard";
      auto [i, j] = parse_label(label_a);
      if (c_char->parsed()) {
        GradedCharacter ch = graded_character(named_module(N, kind, i, j));
        if (fmt == "json")
          out << character_json(ch).dump() << "\n";
        else
          print_character_text(out, ch);
        return 0;
      }
      return do_module(kind, i, j, N, fmt, out);
    }
    if (c_tensor->parsed()) {
      auto [ia, ja] = parse_label(label_a);
      auto [ib, jb] = parse_label(label_b);
      return do_tensor(std_a ? "standard" : "simple", ia, ja,
                       std_b ? "standard" : "simple", ib, jb, N, fmt, out);
    }
    if (c_groth->parsed()) {
      auto [ia, ja] = parse_label(label_a);
      auto [ib, jb] = parse_label(label_b);
      return do_grothendieck(ia, ja, ib, jb, N, fmt, out);
    }
    if (c_rmatrix->parsed()) {
      if (!c_rmatrix->count("--backend")) backend = "symbolic";
      return do_rmatrix(m1, m2, twist_only, backend, N, fmt, out);
    }
    if (c_skein->parsed()) return do_skein(fmt, out);
    if (c_inv->parsed())
      return do_invariant(knot, braid, strands, cut, tangle_file, backend, N,
                          fmt, out);
    if (c_table->parsed()) return do_knot_table(golden, fmt, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const consistency_error& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::ios_base::failure& e) {
    err << "io error: " << e.what() << "\n";
    return 3;
  } catch (const tangle_error& e) {
    std::string what = e.what();
    if (what.find("broken functoriality") != std::string::npos) {
      err << "consistency failure: " << what << "\n";
      return 2;
    }
    err << "error: " << what << "\n";
    return 1;
  } catch (const module_error& e) {
    err << "consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace uqsl
