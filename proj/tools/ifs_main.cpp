// ifs - command-line front end over the plifs C API.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plifs.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitOverflow = 2;
constexpr int kExitUsage = 64;

long arc_cap_from_env() {
  const char *raw = std::getenv("IFS_ARC_CAP");
  if (!raw || !*raw) return 0; // library default (10^6)
  char *end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || v <= 0) return 0;
  return v;
}

int exit_code(plifs_status st) {
  if (st == PLIFS_OK) return kExitOk;
  if (st == PLIFS_ERR_OVERFLOW) return kExitOverflow;
  return kExitDomainError;
}

int report_error(plifs_status st) {
  std::cerr << "error: " << plifs_status_name(st) << ": " << plifs_last_error() << "\n";
  return exit_code(st);
}

bool emit(const std::string &text, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return false;
  }
  return true;
}

struct OwnedString {
  char *ptr = nullptr;
  ~OwnedString() { plifs_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

struct BundleHandle {
  plifs_bundle *ptr = nullptr;
  ~BundleHandle() { plifs_bundle_free(ptr); }
};

struct TraceHandle {
  plifs_trace *ptr = nullptr;
  ~TraceHandle() { plifs_trace_free(ptr); }
};

struct MapHandle {
  plifs_plmap *ptr = nullptr;
  ~MapHandle() { plifs_plmap_free(ptr); }
};

plifs_status load_bundle(int example, bool finite, int psi_depth, BundleHandle &b) {
  return plifs_example_build(example, finite ? 1 : 0, psi_depth, &b.ptr);
}

bool read_file(const std::string &path, std::string &out) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    return false;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact-arithmetic minimal sets of piecewise-linear circle IFSs"};
  app.require_subcommand(1);
  int rc = kExitOk;

  // ---- example -------------------------------------------------------------
  auto *cmd_example = app.add_subcommand("example", "emit an example bundle as JSON");
  struct {
    int n = 1;
    bool print = false;
    bool finite = false;
    int psi_depth = 0;
    std::string out;
  } ex;
  cmd_example->add_option("n", ex.n, "example number 1..7")->required();
  cmd_example->add_flag("--print", ex.print, "write the bundle JSON (default)");
  cmd_example->add_flag("--finite", ex.finite, "finite-minimal-set variant of example 1");
  cmd_example->add_option("--psi-depth", ex.psi_depth, "gap-matcher depth for example 7");
  cmd_example->add_option("--out", ex.out, "output path (stdout by default)");
  cmd_example->callback([&] {
    BundleHandle b;
    plifs_status st = load_bundle(ex.n, ex.finite, ex.psi_depth, b);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    OwnedString json;
    st = plifs_bundle_to_json(b.ptr, &json.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    if (!emit(json.str(), ex.out)) rc = kExitDomainError;
  });

  // ---- iterate ---------------------------------------------------------------
  auto *cmd_iterate = app.add_subcommand("iterate", "iterate the set dynamics from the seed");
  struct {
    int n = 1;
    int depth = 6;
    bool finite = false;
    int psi_depth = 0;
    std::string out;
    std::string format = "json";
  } it;
  cmd_iterate->add_option("--example", it.n, "example number 1..7")->required();
  cmd_iterate->add_option("--depth", it.depth, "number of iteration steps")->required();
  cmd_iterate->add_flag("--finite", it.finite, "finite-minimal-set variant of example 1");
  cmd_iterate->add_option("--psi-depth", it.psi_depth, "gap-matcher depth for example 7");
  cmd_iterate->add_option("--out", it.out, "output path");
  cmd_iterate->add_option("--format", it.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_iterate->callback([&] {
    BundleHandle b;
    plifs_status st = load_bundle(it.n, it.finite, it.psi_depth, b);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    TraceHandle t;
    st = plifs_bundle_iterate(b.ptr, it.depth, arc_cap_from_env(), &t.ptr);
    if (st != PLIFS_OK && st != PLIFS_ERR_OVERFLOW) {
      rc = report_error(st);
      return;
    }
    OwnedString text;
    plifs_status st2 = it.format == "csv" ? plifs_trace_to_csv(t.ptr, &text.ptr)
                                          : plifs_trace_to_json(t.ptr, &text.ptr);
    if (st2 != PLIFS_OK) {
      rc = report_error(st2);
      return;
    }
    if (!emit(text.str(), it.out)) {
      rc = kExitDomainError;
      return;
    }
    if (st == PLIFS_ERR_OVERFLOW) rc = report_error(st); // partial trace written
  });

  // ---- orbit -----------------------------------------------------------------
  auto *cmd_orbit = app.add_subcommand("orbit", "breadth-first orbit closure of a point");
  struct {
    int n = 1;
    std::string point;
    int max_len = 8;
    bool finite = false;
    int psi_depth = 0;
    long cap = 0;
    std::string out;
  } ob;
  cmd_orbit->add_option("--example", ob.n, "example number 1..7")->required();
  cmd_orbit->add_option("--point", ob.point, "start point p/q")->required();
  cmd_orbit->add_option("--max-len", ob.max_len, "maximum word length")->required();
  cmd_orbit->add_flag("--finite", ob.finite, "finite-minimal-set variant of example 1");
  cmd_orbit->add_option("--psi-depth", ob.psi_depth, "gap-matcher depth for example 7");
  cmd_orbit->add_option("--cap", ob.cap, "orbit point cap (default 10^6)");
  cmd_orbit->add_option("--out", ob.out, "output path");
  cmd_orbit->callback([&] {
    BundleHandle b;
    plifs_status st = load_bundle(ob.n, ob.finite, ob.psi_depth, b);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    OwnedString json;
    st = plifs_bundle_orbit(b.ptr, ob.point.c_str(), ob.max_len, ob.cap, &json.ptr);
    if (st != PLIFS_OK && !(st == PLIFS_ERR_OVERFLOW && json.ptr)) {
      rc = report_error(st);
      return;
    }
    if (!emit(json.str(), ob.out)) {
      rc = kExitDomainError;
      return;
    }
    if (st == PLIFS_ERR_OVERFLOW) rc = report_error(st);
  });

  // ---- classify ----------------------------------------------------------------
  auto *cmd_classify = app.add_subcommand("classify", "decompose and classify a trace");
  struct {
    int n = 1;
    int depth = 6;
    bool finite = false;
    int psi_depth = 0;
    std::string out;
  } cl;
  cmd_classify->add_option("--example", cl.n, "example number 1..7")->required();
  cmd_classify->add_option("--depth", cl.depth, "iteration depth")->required();
  cmd_classify->add_flag("--finite", cl.finite, "finite-minimal-set variant of example 1");
  cmd_classify->add_option("--psi-depth", cl.psi_depth, "gap-matcher depth for example 7");
  cmd_classify->add_option("--out", cl.out, "output path");
  cmd_classify->callback([&] {
    BundleHandle b;
    plifs_status st = load_bundle(cl.n, cl.finite, cl.psi_depth, b);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    OwnedString json;
    st = plifs_bundle_classify(b.ptr, cl.depth, arc_cap_from_env(), &json.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    if (!emit(json.str(), cl.out)) rc = kExitDomainError;
  });

  // ---- cantorval -----------------------------------------------------------------
  auto *cmd_cv = app.add_subcommand("cantorval", "symmetric-Cantorval predicate on a trace");
  struct {
    int n = 7;
    int depth = 6;
    int checks = 3;
    bool finite = false;
    int psi_depth = 0;
    std::string out;
  } cv;
  cmd_cv->add_option("--example", cv.n, "example number 1..7")->required();
  cmd_cv->add_option("--depth", cv.depth, "iteration depth")->required();
  cmd_cv->add_option("--checks", cv.checks, "levels of accumulation evidence (default 3)");
  cmd_cv->add_flag("--finite", cv.finite, "finite-minimal-set variant of example 1");
  cmd_cv->add_option("--psi-depth", cv.psi_depth, "gap-matcher depth for example 7");
  cmd_cv->add_option("--out", cv.out, "output path");
  cmd_cv->callback([&] {
    BundleHandle b;
    plifs_status st = load_bundle(cv.n, cv.finite, cv.psi_depth, b);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    int value = 0;
    OwnedString json;
    st = plifs_bundle_cantorval(b.ptr, cv.depth, cv.checks, arc_cap_from_env(), &value,
                                &json.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    if (!emit(json.str(), cv.out)) rc = kExitDomainError;
  });

  // ---- psi -------------------------------------------------------------------------
  auto *cmd_psi = app.add_subcommand("psi", "gap-matching homeomorphism report");
  struct {
    std::string pair = "example7";
    int depth = 4;
    std::string out;
  } ps;
  cmd_psi->add_option("--pair", ps.pair, "triadic or example7")
      ->check(CLI::IsMember({"triadic", "example7"}));
  cmd_psi->add_option("--depth", ps.depth, "matcher recursion depth");
  cmd_psi->add_option("--out", ps.out, "output path");
  cmd_psi->callback([&] {
    OwnedString json;
    plifs_status st = plifs_psi_report(ps.pair.c_str(), ps.depth, &json.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    if (!emit(json.str(), ps.out)) rc = kExitDomainError;
  });

  // ---- plmap ------------------------------------------------------------------------
  auto *cmd_plmap = app.add_subcommand("plmap", "piecewise-linear map utilities");
  cmd_plmap->require_subcommand(1);
  auto *cmd_eval = cmd_plmap->add_subcommand("eval", "evaluate a map at a point");
  struct {
    std::string in, at, out;
  } ev;
  cmd_eval->add_option("--in", ev.in, "map JSON file")->required();
  cmd_eval->add_option("--at", ev.at, "point p/q")->required();
  cmd_eval->add_option("--out", ev.out, "output path");
  cmd_eval->callback([&] {
    std::string text;
    if (!read_file(ev.in, text)) {
      rc = kExitDomainError;
      return;
    }
    MapHandle m;
    plifs_status st = plifs_plmap_from_json(text.c_str(), &m.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    OwnedString value;
    st = plifs_plmap_eval(m.ptr, ev.at.c_str(), &value.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    if (!emit(value.str(), ev.out)) rc = kExitDomainError;
  });

  auto *cmd_compose = cmd_plmap->add_subcommand("compose", "compose two maps (outer after inner)");
  struct {
    std::string outer, inner, out;
  } co;
  cmd_compose->add_option("--outer", co.outer, "outer map JSON file")->required();
  cmd_compose->add_option("--inner", co.inner, "inner map JSON file")->required();
  cmd_compose->add_option("--out", co.out, "output path");
  cmd_compose->callback([&] {
    std::string t1, t2;
    if (!read_file(co.outer, t1) || !read_file(co.inner, t2)) {
      rc = kExitDomainError;
      return;
    }
    MapHandle a, b, c;
    plifs_status st = plifs_plmap_from_json(t1.c_str(), &a.ptr);
    if (st == PLIFS_OK) st = plifs_plmap_from_json(t2.c_str(), &b.ptr);
    if (st == PLIFS_OK) st = plifs_plmap_compose(a.ptr, b.ptr, &c.ptr);
    OwnedString json;
    if (st == PLIFS_OK) st = plifs_plmap_to_json(c.ptr, &json.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    if (!emit(json.str(), co.out)) rc = kExitDomainError;
  });

  auto *cmd_invert = cmd_plmap->add_subcommand("invert", "invert a map");
  struct {
    std::string in, out;
  } iv;
  cmd_invert->add_option("--in", iv.in, "map JSON file")->required();
  cmd_invert->add_option("--out", iv.out, "output path");
  cmd_invert->callback([&] {
    std::string text;
    if (!read_file(iv.in, text)) {
      rc = kExitDomainError;
      return;
    }
    MapHandle m, inv;
    plifs_status st = plifs_plmap_from_json(text.c_str(), &m.ptr);
    if (st == PLIFS_OK) st = plifs_plmap_invert(m.ptr, &inv.ptr);
    OwnedString json;
    if (st == PLIFS_OK) st = plifs_plmap_to_json(inv.ptr, &json.ptr);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    if (!emit(json.str(), iv.out)) rc = kExitDomainError;
  });

  // ---- verify-all ---------------------------------------------------------------------
  auto *cmd_verify = app.add_subcommand("verify-all", "run the full acceptance matrix");
  struct {
    std::string out;
  } vf;
  cmd_verify->add_option("--out", vf.out, "write the JSON report here");
  cmd_verify->callback([&] {
    OwnedString report;
    int failures = 0;
    plifs_status st = plifs_verify_all(&report.ptr, &failures);
    if (st != PLIFS_OK) {
      rc = report_error(st);
      return;
    }
    // one line per criterion on stdout
    std::string json = report.str();
    // cheap scan for "id", "name", "pass" fields in order
    size_t pos = 0;
    while ((pos = json.find("{\"id\":", pos)) != std::string::npos) {
      size_t id_end = json.find(',', pos);
      std::string id = json.substr(pos + 6, id_end - pos - 6);
      size_t name_pos = json.find("\"name\":\"", pos) + 8;
      size_t name_end = json.find('"', name_pos);
      std::string name = json.substr(name_pos, name_end - name_pos);
      bool pass = json.compare(json.find("\"pass\":", pos) + 7, 4, "true") == 0;
      std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name
                << "\n";
      pos = name_end;
    }
    if (!vf.out.empty() && !emit(json, vf.out)) {
      rc = kExitDomainError;
      return;
    }
    rc = failures == 0 ? kExitOk : kExitDomainError;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }
  return rc;
}
