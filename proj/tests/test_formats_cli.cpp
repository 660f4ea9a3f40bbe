#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <grpgeo/grpgeo.hpp>

using namespace grpgeo;

namespace {

std::string samples_dir() { return GRPGEO_SAMPLES_DIR; }
std::string docs_dir() { return GRPGEO_DOCS_DIR; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool same_table(const GroupPtr& A, const GroupPtr& B) {
  if (A->order() != B->order()) return false;
  for (int i = 0; i < A->order(); ++i)
    for (int j = 0; j < A->order(); ++j)
      if (A->mul(elem_t(i), elem_t(j)) != B->mul(elem_t(i), elem_t(j))) return false;
  return true;
}

struct RunResult {
  int exit_code;
  std::string out;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  auto tmp = std::filesystem::temp_directory_path() /
             ("grpgeo_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  std::string cmd = std::string(GRPGEO_CLI_PATH) + " " + args + " >" + tmp.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  std::filesystem::remove(tmp);
  return r;
}

json parse_json(const std::string& text) {
  auto j = json::parse(text, nullptr, false);
  REQUIRE(!j.is_discarded());
  return j;
}

// Minimal structural validator: enough of draft-07 to pin the report
// shape against docs/report.schema.json without a schema engine.
void check_against_schema(const json& schema, const json& inst, const std::string& where) {
  INFO(where);
  if (schema.contains("const")) {
    REQUIRE(inst == schema["const"]);
    return;
  }
  if (schema.contains("type")) {
    auto matches = [&](const std::string& t) {
      if (t == "object") return inst.is_object();
      if (t == "array") return inst.is_array();
      if (t == "string") return inst.is_string();
      if (t == "integer") return inst.is_number_integer();
      if (t == "number") return inst.is_number();
      if (t == "boolean") return inst.is_boolean();
      if (t == "null") return inst.is_null();
      return false;
    };
    if (schema["type"].is_string()) {
      REQUIRE(matches(schema["type"].get<std::string>()));
    } else {
      bool any = false;
      for (const auto& t : schema["type"]) any = any || matches(t.get<std::string>());
      REQUIRE(any);
    }
  }
  if (inst.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"]) {
        INFO(where << " requires " << k.get<std::string>());
        REQUIRE(inst.contains(k.get<std::string>()));
      }
    const json props = schema.value("properties", json::object());
    if (schema.value("additionalProperties", json(true)) == json(false))
      for (const auto& [k, v] : inst.items()) {
        INFO(where << " has unexpected key " << k);
        REQUIRE(props.contains(k));
      }
    for (const auto& [k, sub] : props.items())
      if (inst.contains(k)) check_against_schema(sub, inst[k], where + "." + k);
  }
  if (inst.is_array() && schema.contains("items") && schema["items"].is_object()) {
    int i = 0;
    for (const auto& el : inst)
      check_against_schema(schema["items"], el, where + "[" + std::to_string(i++) + "]");
  }
  if (schema.contains("minimum") && inst.is_number())
    REQUIRE(inst.get<double>() >= schema["minimum"].get<double>());
}

}  // namespace

TEST_CASE("gtab export and reingest round-trips the table") {
  // symmetric/alternating are excluded: their cycle labels contain spaces
  // and get dropped on export (covered by the next test case)
  for (const char* spec : {"cyclic:6", "elementary-abelian:2^2", "dihedral:6", "dicyclic:8",
                           "dihedral:10", "direct-product(cyclic:2,cyclic:4)"}) {
    auto G = builtin(spec);
    auto H = ingest_group_text(to_gtab(G), std::string("roundtrip ") + spec);
    REQUIRE(same_table(G, H));
    // builtin labels are whitespace-free, so they survive the trip
    for (int i = 0; i < G->order(); ++i) REQUIRE(G->label(elem_t(i)) == H->label(elem_t(i)));
  }
}

TEST_CASE("gtab export omits labels containing whitespace") {
  auto A4 = builtin_alternating(4);  // cycle labels like "(1 2 3)"
  std::string text = to_gtab(A4);
  REQUIRE(text.find("labels") == std::string::npos);
  auto H = ingest_group_text(text, "a4 reingest");
  REQUIRE(same_table(A4, H));
  REQUIRE(H->label(1) == "g1");  // fallback labels
}

TEST_CASE("gtab parser accepts comments and blank lines") {
  std::string text =
      "# klein four\n"
      "gtab 1\n"
      "\n"
      "order 4   # inline comment\n"
      "labels e a b ab\n"
      "0 1 2 3\n"
      "1 0 3 2\n"
      "2 3 0 1\n"
      "3 2 1 0\n";
  auto G = ingest_group_text(text, "klein");
  REQUIRE(G->order() == 4);
  REQUIRE(G->is_abelian());
  REQUIRE(G->label(3) == "ab");
  REQUIRE(G->element_order(3) == 2);
}

TEST_CASE("gtab parse errors") {
  auto expect = [](const std::string& text, errc code) {
    try {
      parse_gtab(text, "case");
      FAIL("expected an error");
    } catch (const Error& e) {
      REQUIRE(e.code() == code);
    }
  };
  expect("gtab 2\norder 2\n0 1\n1 0\n", errc::parse_error);              // bad version
  expect("order 2\n0 1\n1 0\n", errc::parse_error);                      // missing header
  expect("gtab 1\nsize 2\n0 1\n1 0\n", errc::parse_error);               // bad order line
  expect("gtab 1\norder x\n", errc::parse_error);                        // non-numeric order
  expect("gtab 1\norder 0\n", errc::parse_error);                        // order < 1
  expect("gtab 1\norder 2\n0 1\n", errc::parse_error);                   // truncated rows
  expect("gtab 1\norder 2\n0 1 0\n1 0 1\n", errc::parse_error);          // row too wide
  expect("gtab 1\norder 2\n0 q\n1 0\n", errc::parse_error);              // bad index token
  expect("gtab 1\norder 2\nlabels e\n0 1\n1 0\n", errc::parse_error);    // label count
  expect("gtab 1\norder 2\n1 0\n0 1\n", errc::parse_error);              // identity not at 0
  expect("gtab 1\norder 3\n0 1 2\n1 2 0\n2 0 5\n", errc::not_a_group);   // index out of range
  expect("gtab 1\norder 3\n0 1 2\n1 1 0\n2 0 1\n", errc::not_a_group);   // not latin
}

TEST_CASE("gperm parsing") {
  std::string text =
      "# S3 on three points\n"
      "gperm 1\n"
      "degree 3\n"
      "gen (1 2 3)\n"
      "gen (1 2)\n";
  auto G = ingest_group_text(text, "s3");
  REQUIRE(G->order() == 6);
  REQUIRE(!G->is_abelian());

  auto expect = [](const std::string& t, errc code) {
    try {
      parse_gperm(t, "case");
      FAIL("expected an error");
    } catch (const Error& e) {
      REQUIRE(e.code() == code);
    }
  };
  expect("gperm 1\n", errc::parse_error);                                   // truncated
  expect("gperm 2\ndegree 3\ngen (1 2)\n", errc::parse_error);              // bad version
  expect("gperm 1\ndegree 0\ngen (1 2)\n", errc::parse_error);              // degree < 1
  expect("gperm 1\ndegree 300\ngen (1 2)\n", errc::parse_error);            // degree > 255
  expect("gperm 1\ndegree 3\n", errc::parse_error);                         // no generators
  expect("gperm 1\ndegree 3\nperm (1 2)\n", errc::parse_error);             // not a gen line
  expect("gperm 1\ndegree 3\ngen (1 2)(2 3)\n", errc::parse_error);         // repeated point
  expect("gperm 1\ndegree 3\ngen (1 5)\n", errc::parse_error);              // point > degree
}

TEST_CASE("ingest dispatches on the header, not the file name") {
  auto G = ingest_group_text("gperm 1\ndegree 4\ngen (1 2 3 4)\n", "whatever.gtab");
  REQUIRE(G->order() == 4);
  try {
    ingest_group_text("not a group file\n", "junk");
    FAIL("expected an error");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::parse_error);
  }
}

TEST_CASE("sample files ingest with the expected structure") {
  auto z4 = ingest_group(samples_dir() + "/z4.gtab");
  REQUIRE(z4->order() == 4);
  REQUIRE(z4->is_abelian());
  REQUIRE(z4->element_order(elem_t(z4->find_label("a"))) == 4);

  auto s3 = ingest_group(samples_dir() + "/s3.gtab");
  REQUIRE(s3->order() == 6);
  REQUIRE(!s3->is_abelian());
  REQUIRE(s3->find_label("r") >= 0);
  REQUIRE(s3->find_label("s") >= 0);

  auto q8 = ingest_group(samples_dir() + "/q8.gtab");
  REQUIRE(q8->order() == 8);
  REQUIRE(center(q8).order() == 2);

  auto s3p = ingest_group(samples_dir() + "/s3.gperm");
  REQUIRE(s3p->order() == 6);
  REQUIRE(same_table(s3p, builtin_symmetric(3)) == (s3p->table_hash() == builtin_symmetric(3)->table_hash()));

  auto a5 = ingest_group(samples_dir() + "/a5.gperm");
  REQUIRE(a5->order() == 60);
  REQUIRE(normal_subgroups(a5).size() == 2);  // simple

  // the two s3 descriptions agree up to isomorphism (same order profile)
  std::multiset<int> orders_tab, orders_perm;
  for (int i = 0; i < 6; ++i) {
    orders_tab.insert(s3->element_order(elem_t(i)));
    orders_perm.insert(s3p->element_order(elem_t(i)));
  }
  REQUIRE(orders_tab == orders_perm);
}

TEST_CASE("cli: group construction, export, and report shape", "[cli]") {
  auto r = run_cli("group --family symmetric:3");
  REQUIRE(r.exit_code == 0);
  auto j = parse_json(r.out);
  REQUIRE(j["tool"] == "grpgeo");
  REQUIRE(j["subjects"].size() == 1);
  REQUIRE(j["subjects"][0]["order"] == 6);
  auto v = j["subjects"][0]["verdicts"][0];
  REQUIRE(v["property"] == "group");
  REQUIRE(v["params"]["abelian"] == false);
  REQUIRE(v["params"]["nilpotent"] == false);
  REQUIRE(v["params"]["center_order"] == 1);
  REQUIRE(v["params"]["exponent"] == 6);
  REQUIRE(j["aggregates"]["verdicts"] == 1);

  auto schema = parse_json(slurp(docs_dir() + "/report.schema.json"));
  check_against_schema(schema, j, "report");

  auto rt = run_cli("group --family cyclic:6 --format text");
  REQUIRE(rt.exit_code == 0);
  REQUIRE(rt.out.rfind("grpgeo", 0) == 0);
  REQUIRE(rt.out.find("group") != std::string::npos);

  auto tmp = std::filesystem::temp_directory_path() /
             ("grpgeo_export_" + std::to_string(::getpid()) + ".gtab");
  auto rx = run_cli("group --family dicyclic:8 --export " + tmp.string());
  REQUIRE(rx.exit_code == 0);
  auto q8 = ingest_group(tmp.string());
  REQUIRE(q8->order() == 8);
  std::filesystem::remove(tmp);
}

TEST_CASE("cli: usage and input errors exit 2, caps exit 3", "[cli]") {
  REQUIRE(run_cli("").exit_code == 2);                              // no subcommand
  REQUIRE(run_cli("--help").exit_code == 0);
  REQUIRE(run_cli("nosuchcommand").exit_code == 2);
  REQUIRE(run_cli("group").exit_code == 2);                         // neither --group nor --family
  REQUIRE(run_cli("group --family cyclic:6 --group x.gtab").exit_code == 2);
  REQUIRE(run_cli("group --family nosuch:5").exit_code == 2);
  REQUIRE(run_cli("group --group /nonexistent/missing.gtab").exit_code == 2);
  REQUIRE(run_cli("group --family cyclic:200").exit_code == 3);     // default order cap 128
  REQUIRE(run_cli("group --family cyclic:200 --max-order 256").exit_code == 0);
  REQUIRE(run_cli("closure --family cyclic:4 --points zz").exit_code == 2);  // unknown label
  REQUIRE(run_cli("closure --family cyclic:4 --points a --mode nosuch").exit_code == 2);
  REQUIRE(run_cli("variety --family cyclic:4").exit_code == 2);     // variety needs --system
  REQUIRE(run_cli("variety --family symmetric:3 --system \"[x1,x2\" -n 2").exit_code == 2);
  REQUIRE(run_cli("theorem1 --group " + samples_dir() + "/s3.gtab --points e").exit_code == 2);

  auto r = run_cli("closure --family alternating:5 -n 2 --points \"(1 2 3),(1 2 4)\" --budget 100");
  REQUIRE(r.exit_code == 3);
  REQUIRE(r.out.find("BudgetExceeded") != std::string::npos);
}

TEST_CASE("cli: property checks exit 0 and report the verdict", "[cli]") {
  auto r = run_cli("check domain --family alternating:5");
  REQUIRE(r.exit_code == 0);
  auto j = parse_json(r.out);
  REQUIRE(j["subjects"][0]["verdicts"][0]["holds"] == true);

  // a false verdict is still a successful query
  r = run_cli("check domain --family symmetric:3");
  REQUIRE(r.exit_code == 0);
  j = parse_json(r.out);
  auto v = j["subjects"][0]["verdicts"][0];
  REQUIRE(v["holds"] == false);
  REQUIRE(!v["witnesses"].empty());

  r = run_cli("check csnk -k 1 --group " + samples_dir() + "/q8.gtab");
  REQUIRE(r.exit_code == 0);
  REQUIRE(parse_json(r.out)["subjects"][0]["verdicts"][0]["holds"] == false);

  r = run_cli("check csnk -k 2 --group " + samples_dir() + "/q8.gtab");
  REQUIRE(r.exit_code == 0);
  j = parse_json(r.out);
  REQUIRE(j["subjects"][0]["verdicts"][0]["holds"] == true);
  REQUIRE(j["subjects"][0]["verdicts"][0]["params"]["k"] == 2);

  r = run_cli("check ct --family alternating:5");
  REQUIRE(parse_json(r.out)["subjects"][0]["verdicts"][0]["holds"] == true);

  std::string s3tab = samples_dir() + "/s3.gtab";
  r = run_cli("check malnormal --group " + s3tab + " --subgroup s");
  REQUIRE(r.exit_code == 0);
  REQUIRE(parse_json(r.out)["subjects"][0]["verdicts"][0]["holds"] == true);

  r = run_cli("check malnormal --group " + s3tab + " --subgroup r");
  REQUIRE(r.exit_code == 0);
  j = parse_json(r.out);
  REQUIRE(j["subjects"][0]["verdicts"][0]["holds"] == false);
  REQUIRE(j["subjects"][0]["verdicts"][0]["witnesses"][0]["kind"] == "malnormal-failure");

  r = run_cli("check malnormal --group " + s3tab);
  REQUIRE(r.exit_code == 2);  // --subgroup is required

  // the CLI verdict must match the library on the same element
  auto S3 = ingest_group(s3tab);
  elem_t rot = elem_t(S3->find_label("r"));
  bool lib = is_zero_divisor(S3, rot).is_zero_divisor;
  r = run_cli("check zero-divisor --group " + s3tab + " --element r");
  REQUIRE(r.exit_code == 0);
  REQUIRE(parse_json(r.out)["subjects"][0]["verdicts"][0]["holds"] == lib);
}

TEST_CASE("cli: varieties, closures, and coordinate groups", "[cli]") {
  auto r = run_cli("variety --family symmetric:3 --system \"[x1,x2]\" -n 2");
  REQUIRE(r.exit_code == 0);
  auto j = parse_json(r.out);
  REQUIRE(j["subjects"][0]["verdicts"][0]["params"]["size"] == 18);  // commuting pairs in S3

  r = run_cli("closure --family cyclic:4 --mode coefficient-free --points a");
  REQUIRE(r.exit_code == 0);
  j = parse_json(r.out);
  auto v = j["subjects"][0]["verdicts"][0];
  REQUIRE(v["params"]["closure_size"] == 4);
  REQUIRE(v["params"]["is_algebraic"] == false);
  REQUIRE(v["witnesses"][0]["kind"] == "algebraic-closure");
  REQUIRE(v["witnesses"][0]["points"].size() == 4);

  r = run_cli("irreducible --family cyclic:4 -n 2 --points a");
  REQUIRE(r.exit_code == 2);  // arity mismatch
  r = run_cli("irreducible --family elementary-abelian:2^2 --points \"e;a1\"");
  REQUIRE(r.exit_code == 0);
  j = parse_json(r.out);
  REQUIRE(j["subjects"][0]["verdicts"][0]["holds"] == false);

  r = run_cli("components --family elementary-abelian:2^2 --points \"e;a1\"");
  j = parse_json(r.out);
  REQUIRE(j["subjects"][0]["verdicts"][0]["params"]["count"] == 2);

  auto tmp = std::filesystem::temp_directory_path() /
             ("grpgeo_carrier_" + std::to_string(::getpid()) + ".gtab");
  r = run_cli("coord --family elementary-abelian:2^2 --points \"e;a1\" --export " + tmp.string());
  REQUIRE(r.exit_code == 0);
  j = parse_json(r.out);
  REQUIRE(j["subjects"][0]["verdicts"][0]["params"]["carrier_order"] == 8);
  auto carrier = ingest_group(tmp.string());
  REQUIRE(carrier->order() == 8);
  std::filesystem::remove(tmp);

  r = run_cli("theorem1 --family alternating:5 --points \"(1 2 3)\"");
  REQUIRE(r.exit_code == 0);
  j = parse_json(r.out);
  v = j["subjects"][0]["verdicts"][0];
  REQUIRE(v["holds"] == true);
  REQUIRE(v["params"]["irreducible"] == true);
  REQUIRE(v["params"]["gamma_G_domain"] == true);
  REQUIRE(v["params"]["embedding_point"] == true);
  REQUIRE(v["params"]["carrier_order"] == 60);
}

TEST_CASE("cli: --out writes the same report to a file", "[cli]") {
  auto tmp = std::filesystem::temp_directory_path() /
             ("grpgeo_out_" + std::to_string(::getpid()) + ".json");
  auto direct = run_cli("check domain --family dicyclic:8");
  auto filed = run_cli("check domain --family dicyclic:8 --out " + tmp.string());
  REQUIRE(filed.exit_code == 0);
  REQUIRE(filed.out.empty());
  REQUIRE(slurp(tmp.string()) == direct.out);
  std::filesystem::remove(tmp);
}

TEST_CASE("cli: verify runs suites and is deterministic", "[cli]") {
  std::string args =
      "verify --suites domain-equivalence,csa-ct --corpus-max-order 12 --seed 7 --format json";
  auto r1 = run_cli(args);
  REQUIRE(r1.exit_code == 0);
  auto j = parse_json(r1.out);
  REQUIRE(j["aggregates"]["subjects"].get<int>() >= 8);
  REQUIRE(j["aggregates"]["holds_false"] == 0);

  auto schema = parse_json(slurp(docs_dir() + "/report.schema.json"));
  check_against_schema(schema, j, "verify-report");

  // byte-identical across repeated runs and across thread counts
  auto r2 = run_cli(args);
  REQUIRE(r1.out == r2.out);
  auto r4 = run_cli(args + " --jobs 4");
  REQUIRE(r1.out == r4.out);

  REQUIRE(run_cli("verify --suites nosuch").exit_code == 2);
}
