// Batch front end: validate, classify, transform, compare, roundtrip,
// counterexample. Exit codes: 0 ok, 2 validation failure, 3 law-check
// negative, 4 budget exceeded, 5 I/O, syntax or usage. COMPCAT_BUDGET sets
// the default candidate budget for compare.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compcat/document.hpp"
#include "compcat/laws.hpp"
#include "compcat/translators.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace compcat;

namespace {

[[noreturn]] void usage_error(const std::string& msg) { throw Error("UsageError", msg); }

int exit_code_for(const Error& e) {
  if (e.code == "BudgetExceeded") return 4;
  for (const char* io : {"SyntaxError", "UnknownKind", "VersionMismatch", "KindMismatch",
                         "UnknownSuite", "IoError", "UsageError"})
    if (e.code == io) return 5;
  return 2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) throw Error("IoError", "cannot write " + path);
}

Document load(const std::string& path) { return parse_document(read_file(path)); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// -- validate -------------------------------------------------------------------

ValidationReport validate_any(const Document& d) {
  if (d.kind == "category") return validate_category(decode_category(d)).report;
  if (d.kind == "functor") return validate_functor(decode_functor(d)).report;
  if (d.kind == "compcat") return validate_compcat(decode_compcat(d)).report;
  if (d.kind == "dmc") return validate_dmc(decode_display(d), true).report;
  if (d.kind == "sdmc") return validate_dmc(decode_display(d), false).report;
  if (d.kind == "clan") return validate_clan(decode_display(d)).report;
  if (d.kind == "cwa") return validate_cwa(decode_cwa(d)).report;
  if (d.kind == "cwf") return validate_cwf(decode_cwf(d)).report;
  if (d.kind == "natmod") return validate_natmod(decode_natmod(d)).report;
  if (d.kind == "cxlcat") return validate_cxlcat(decode_cxlcat(d)).report;
  if (d.kind == "map") return validate_map(decode_map(d)).report;
  if (d.kind == "transformation")
    return validate_transformation(decode_transformation(d)).report;
  throw Error("UnknownKind", d.kind);
}

int cmd_validate(const std::string& file, bool as_json) {
  Document d = load(file);
  ValidationReport rep = validate_any(d);
  if (as_json) {
    json out = {{"kind", d.kind}, {"ok", rep.ok()}, {"violations", json::array()}};
    for (const auto& v : rep.violations)
      out["violations"].push_back({{"code", v.code}, {"detail", v.detail}});
    print_json(out);
  } else if (rep.ok()) {
    std::cout << "ok\n";
  } else {
    std::cerr << rep.to_string() << "\n";
  }
  return rep.ok() ? 0 : 2;
}

// -- classify -------------------------------------------------------------------

json flag_json(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }
std::string flag_str(const std::optional<bool>& b) {
  return b ? (*b ? "true" : "false") : "n/a";
}

int cmd_classify(const std::string& file, bool as_json) {
  Checked<CompCat> cc = validate_compcat(decode_compcat(load(file)));
  if (!cc.ok()) {
    std::cerr << cc.report.to_string() << "\n";
    return 2;
  }
  CompCatFlags f = classify(*cc.value);
  if (as_json) {
    print_json({{"comp_closed", flag_json(f.comp_closed)},
                {"contextual", flag_json(f.contextual)},
                {"discrete", f.discrete},
                {"full", f.full},
                {"pointed", f.pointed},
                {"replete", flag_json(f.replete)},
                {"rooted", flag_json(f.rooted)},
                {"split", flag_json(f.split)},
                {"subcategorical", f.subcategorical},
                {"trivial", f.trivial}});
  } else {
    std::cout << "full: " << (f.full ? "true" : "false") << "\n"
              << "subcategorical: " << (f.subcategorical ? "true" : "false") << "\n"
              << "replete: " << flag_str(f.replete) << "\n"
              << "comp_closed: " << flag_str(f.comp_closed) << "\n"
              << "trivial: " << (f.trivial ? "true" : "false") << "\n"
              << "discrete: " << (f.discrete ? "true" : "false") << "\n"
              << "split: " << flag_str(f.split) << "\n"
              << "pointed: " << (f.pointed ? "true" : "false") << "\n"
              << "rooted: " << flag_str(f.rooted) << "\n"
              << "contextual: " << flag_str(f.contextual) << "\n";
  }
  return 0;
}

// -- transform ------------------------------------------------------------------

const std::vector<std::string>& transform_ops() {
  static const std::vector<std::string> ops = {
      "cc2cwa",  "cc2dmc",  "compclose", "cwa2cc",  "cwa2cwf", "cwa2cxl",
      "cwf2cwa", "cwf2nm",  "cxl2cwa",   "cxlcore", "dmc2cc",  "fullify",
      "lex2clan", "nm2cwf", "repletion", "sepcore", "slice",   "subcategorize"};
  return ops;
}

bool is_display_kind(const std::string& k) {
  return k == "dmc" || k == "sdmc" || k == "clan";
}

struct TransformResult {
  Document output;
  std::optional<Document> unit;
};

TransformResult apply_op(const std::string& op, const Document& in,
                         const std::string& context) {
  if (op == "fullify") {
    TransformedCompCat t = fullify(decode_compcat(in));
    return {encode_compcat(t.compcat), encode_map(t.unit)};
  }
  if (op == "subcategorize") {
    TransformedCompCat t = subcategorize(decode_compcat(in));
    return {encode_compcat(t.compcat), encode_map(t.unit)};
  }
  if (op == "repletion") {
    if (is_display_kind(in.kind)) {
      TransformedDisplay t = repletion(decode_display(in));
      return {encode_display(t.display, "dmc"), encode_map(t.unit)};
    }
    TransformedCompCat t = repletion(decode_compcat(in));
    return {encode_compcat(t.compcat), encode_map(t.unit)};
  }
  if (op == "compclose") {
    TransformedDisplay t = comp_closure(decode_display(in));
    return {encode_display(t.display, "dmc"), encode_map(t.unit)};
  }
  if (op == "dmc2cc") return {encode_compcat(dmc_to_compcat(decode_display(in))), {}};
  if (op == "cc2dmc")
    return {encode_display(compcat_to_dmc(decode_compcat(in)), "sdmc"), {}};
  if (op == "lex2clan")
    return {encode_display(lex_to_clan(decode_category(in)), "clan"), {}};
  if (op == "sepcore") {
    SepCore s = sep_core(decode_display(in));
    return {encode_category(s.core), encode_functor(s.inclusion)};
  }
  if (op == "cxlcore") {
    CxlCore c = cxl_core(decode_compcat(in));
    return {encode_compcat(c.core), encode_map(c.counit)};
  }
  if (op == "slice") {
    if (context.empty()) usage_error("slice needs --context");
    ContextualSlice s = contextual_slice_full(decode_compcat(in), context);
    return {encode_compcat(s.slice), encode_functor(s.to_base)};
  }
  if (op == "cwa2cc") return {encode_compcat(cwa_to_compcat(decode_cwa(in))), {}};
  if (op == "cc2cwa") return {encode_cwa(compcat_to_cwa(decode_compcat(in))), {}};
  if (op == "cwa2cwf") return {encode_cwf(cwa_to_cwf(decode_cwa(in))), {}};
  if (op == "cwf2cwa") return {encode_cwa(cwf_to_cwa(decode_cwf(in))), {}};
  if (op == "cwf2nm") return {encode_natmod(cwf_to_natmod(decode_cwf(in))), {}};
  if (op == "nm2cwf") return {encode_cwf(natmod_to_cwf(decode_natmod(in))), {}};
  if (op == "cxl2cwa") return {encode_cwa(cxlcat_to_cwa(decode_cxlcat(in))), {}};
  if (op == "cwa2cxl") return {encode_cxlcat(cwa_to_cxlcat(decode_cwa(in))), {}};
  usage_error("unknown op " + op);
}

int cmd_transform(const std::string& op, const std::string& in, const std::string& out,
                  const std::string& unit_path, const std::string& context) {
  if (in.empty() || out.empty()) usage_error("transform needs an input file and -o");
  TransformResult r = apply_op(op, load(in), context);
  write_file(out, emit_document(r.output));
  if (!unit_path.empty()) {
    if (!r.unit) usage_error("--emit-unit: " + op + " has no comparison map");
    write_file(unit_path, emit_document(*r.unit));
  }
  return 0;
}

// -- compare ----------------------------------------------------------------------

int report_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    print_json({{"construction", v.construction},
                {"detail", v.detail},
                {"lhs_count", v.lhs_count},
                {"pass", v.pass},
                {"rhs_count", v.rhs_count}});
  } else {
    std::cout << (v.pass ? "pass" : "fail") << ": " << v.construction;
    if (v.lhs_count >= 0) std::cout << " (" << v.lhs_count << " = " << v.rhs_count << ")";
    if (!v.detail.empty()) std::cout << " " << v.detail;
    std::cout << "\n";
  }
  return v.pass ? 0 : 3;
}

int cmd_compare(const std::string& law, const std::string& construction, long long budget,
                const std::vector<std::string>& files, bool as_json) {
  if (law == "unit-equiv") {
    if (construction.empty()) usage_error("unit-equiv needs --construction");
    if (files.size() != 1) usage_error("unit-equiv takes one file");
    Document d = load(files[0]);
    Verdict v = is_display_kind(d.kind)
                    ? check_unit_equivalence(construction, decode_display(d))
                    : check_unit_equivalence(construction, decode_compcat(d));
    return report_verdict(v, as_json);
  }
  if (law == "adjunction") {
    if (construction.empty()) usage_error("adjunction needs --construction");
    if (files.size() != 2) usage_error("adjunction takes two files");
    Document x = load(files[0]);
    Document y = load(files[1]);
    Verdict v;
    if (construction == "comp_closure" || construction == "sep_core")
      v = check_adjunction_hom_bijection(construction, decode_display(x),
                                         decode_display(y), budget);
    else
      v = check_adjunction_hom_bijection(construction, decode_compcat(x),
                                         decode_compcat(y), budget);
    return report_verdict(v, as_json);
  }
  if (law == "rigidity") {
    if (files.size() != 2) usage_error("rigidity takes two compcat files");
    Verdict v = check_contextual_rigidity(decode_compcat(load(files[0])),
                                          decode_compcat(load(files[1])), budget);
    return report_verdict(v, as_json);
  }
  usage_error("unknown law " + law);
}

// -- roundtrip ----------------------------------------------------------------------

int cmd_roundtrip(const std::string& suite, bool as_json) {
  if (fs::is_directory(suite)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(suite))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) usage_error("no .json documents in " + suite);

    bool all = true;
    json cases = json::array();
    for (const auto& f : files) {
      std::string detail;
      try {
        std::string text = read_file(f.string());
        Document d = parse_document(text);
        if (emit_document(d) != text)
          detail = "emit differs from the stored bytes";
        else {
          ValidationReport rep = validate_any(d);
          if (!rep.ok()) detail = rep.violations.front().code;
        }
      } catch (const Error& e) {
        detail = e.what();
      }
      bool pass = detail.empty();
      all = all && pass;
      if (as_json)
        cases.push_back(
            {{"detail", detail}, {"file", f.filename().string()}, {"pass", pass}});
      else
        std::cout << f.filename().string() << ": " << (pass ? "pass" : "FAIL (" + detail + ")")
                  << "\n";
    }
    if (as_json) print_json({{"cases", cases}, {"ok", all}});
    return all ? 0 : 3;
  }

  RoundtripReport rep = roundtrip_suite(suite);
  if (as_json) {
    json cases = json::array();
    for (const auto& c : rep.cases)
      cases.push_back({{"arrow", c.arrow},
                       {"detail", c.detail},
                       {"instance", c.instance},
                       {"pass", c.pass}});
    print_json({{"cases", cases}, {"ok", rep.all_pass}});
  } else {
    std::cout << rep.to_string() << "\n";
  }
  return rep.all_pass ? 0 : 3;
}

// -- counterexample -------------------------------------------------------------------

int cmd_counterexample(const std::string& target, long long budget, bool as_json) {
  if (target != "sdmc") usage_error("unknown counterexample " + target);
  CounterexampleReport r = run_counterexample_sdmc(budget);
  if (as_json) {
    print_json({{"detail", r.detail},
                {"left_is_sdmc", r.left_is_sdmc},
                {"pass", r.pass},
                {"pseudo_equivalences", r.pseudo_equivalences},
                {"pseudo_maps", r.pseudo_maps},
                {"right_is_sdmc", r.right_is_sdmc},
                {"strict_equivalences", r.strict_equivalences},
                {"strict_maps", r.strict_maps}});
  } else {
    std::cout << r.to_string() << "\n";
  }
  return r.pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite comprehension-category toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  auto* v = app.add_subcommand("validate", "run the document kind's validator");
  std::string v_file;
  bool v_json = false;
  v->add_option("file", v_file, "document to check")->required();
  v->add_flag("--json", v_json, "machine-readable report");
  v->callback([&] { rc = cmd_validate(v_file, v_json); });

  auto* c = app.add_subcommand("classify", "print the condition flags of a compcat");
  std::string c_file;
  bool c_json = false;
  c->add_option("file", c_file, "compcat document")->required();
  c->add_flag("--json", c_json, "machine-readable report");
  c->callback([&] { rc = cmd_classify(c_file, c_json); });

  auto* t = app.add_subcommand("transform", "apply a translation to a document");
  std::string t_op, t_in, t_out, t_unit, t_context;
  bool t_list = false;
  t->add_option("--op", t_op, "translation name");
  t->add_option("in", t_in, "input document");
  t->add_option("-o,--output", t_out, "output document path");
  t->add_option("--emit-unit", t_unit, "also write the comparison map/functor");
  t->add_option("--context", t_context, "context object for --op slice");
  t->add_flag("--list-ops", t_list, "print the op names and exit");
  t->callback([&] {
    if (t_list) {
      for (const auto& op : transform_ops()) std::cout << op << "\n";
      rc = 0;
      return;
    }
    if (t_op.empty()) usage_error("transform needs --op");
    rc = cmd_transform(t_op, t_in, t_out, t_unit, t_context);
  });

  auto* cm = app.add_subcommand("compare", "run a law check on concrete instances");
  std::string cm_law, cm_construction;
  long long cm_budget = 1000000;
  std::vector<std::string> cm_files;
  bool cm_json = false;
  cm->add_option("--law", cm_law, "unit-equiv, adjunction or rigidity")->required();
  cm->add_option("--construction", cm_construction, "construction under test");
  cm->add_option("--budget", cm_budget, "candidate budget")
      ->envname("COMPCAT_BUDGET");
  cm->add_option("files", cm_files, "instance documents");
  cm->add_flag("--json", cm_json, "machine-readable report");
  cm->callback([&] { rc = cmd_compare(cm_law, cm_construction, cm_budget, cm_files, cm_json); });

  auto* rt = app.add_subcommand("roundtrip", "re-serialize and re-check documents");
  std::string rt_suite;
  bool rt_json = false;
  rt->add_option("--suite", rt_suite, "fixture directory or named instance set")
      ->required();
  rt->add_flag("--json", rt_json, "machine-readable report");
  rt->callback([&] { rc = cmd_roundtrip(rt_suite, rt_json); });

  auto* cx = app.add_subcommand("counterexample", "reproduce a separating example");
  std::string cx_target;
  long long cx_budget = 50000000;
  bool cx_json = false;
  cx->add_option("target", cx_target, "which example (sdmc)")->required();
  cx->add_option("--budget", cx_budget, "candidate budget");
  cx->add_flag("--json", cx_json, "machine-readable report");
  cx->callback([&] { rc = cmd_counterexample(cx_target, cx_budget, cx_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 5;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return rc;
}
