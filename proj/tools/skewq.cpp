#include "skewquiver/checks.hpp"
#include "skewquiver/errors.hpp"
#include "skewquiver/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace skq;

namespace {

void write_out(const std::string &dest, const std::string &text) {
  if (dest == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(dest);
  if (!out)
    throw ValidationError("cannot write '" + dest + "'");
  out << text;
}

struct Source {
  bool potential = false;
  bool e_tilde = false;
  std::string element;
  bool project = false;

  void add_options(CLI::App *cmd) {
    auto *p = cmd->add_flag("--potential", potential,
                            "Use e~ W e~ for the instance potential W");
    auto *e = cmd->add_option("--element", element,
                              "Element file {\"terms\": [...]}");
    auto *t = cmd->add_flag("--e-tilde", e_tilde, "Use the idempotent e~");
    p->excludes(e)->excludes(t);
    e->excludes(t);
    cmd->add_flag("--project", project,
                  "Replace the element x by e~ x e~ before transporting");
  }

  SkewElement element_of(const Setting &S) const {
    if (potential) {
      if (!S.instance().potential)
        throw ValidationError("instance has no potential");
      return S.project(potential_element(S, *S.instance().potential));
    }
    if (e_tilde)
      return S.e_tilde();
    if (element.empty())
      throw ValidationError(
          "one of --potential, --element or --e-tilde is required");
    SkewElement x = element_from_json(S, load_json_file(element));
    return project ? S.project(x) : x;
  }
};

int cmd_reduce(const std::string &path, const std::string &dot,
               const std::string &dot_q, const std::string &json_out) {
  Setting S(load_instance(path));
  QG qg(S);
  std::cout << qg_report(qg);
  if (!dot.empty())
    write_out(dot, qg_dot(qg));
  if (!dot_q.empty())
    write_out(dot_q, quiver_dot(S));
  if (!json_out.empty())
    write_out(json_out, qg_to_json(qg).dump(1) + "\n");
  return 0;
}

int cmd_transport(const std::string &path, const Source &src,
                  PairingMode mode, bool no_verify,
                  const std::string &json_out) {
  Setting S(load_instance(path));
  QG qg(S);
  const SkewElement theta = src.element_of(S);
  TransportOptions opt;
  opt.mode = mode;
  TransportResult r = transport(qg, theta, opt);
  if (src.potential) {
    const InvarianceReport inv = check_invariance(
        S.group(), S.space(Side::M), *S.instance().potential);
    if (!inv.invariant)
      r.notices.insert(r.notices.begin(),
                       "potential is not invariant under element " +
                           S.group().name(inv.first_violation));
  }
  for (const auto &n : r.notices)
    std::cerr << "notice: " << n << "\n";
  std::cout << render_comb(qg, r.comb) << "\n";
  std::cout << r.comb.size() << " terms\n";
  if (!json_out.empty())
    write_out(json_out, comb_to_json(qg, r.comb).dump(1) + "\n");
  if (!no_verify) {
    const RoundtripReport rep = verify_roundtrip(qg, theta, r.comb);
    if (!rep.ok)
      throw ConsistencyError(rep.message);
    std::cout << "round trip verified\n";
  }
  return 0;
}

int cmd_verify(const std::string &path, const Source &src,
               const std::string &comb_path) {
  Setting S(load_instance(path));
  QG qg(S);
  const SkewElement theta = src.element_of(S);
  const PathComb comb = comb_from_json(qg, load_json_file(comb_path));
  const RoundtripReport rep = verify_roundtrip(qg, theta, comb);
  if (!rep.ok) {
    std::cout << "FAIL " << rep.message << "\n";
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

int cmd_selftest(const std::string &fixtures, const std::string &golden) {
  SelftestReport rep = run_selftest(fixtures, golden, std::cout);
  return rep.passed ? 0 : 1;
}

void print_error(const char *kind, const std::string &msg) {
  json err = {{"error", {{"kind", kind}, {"message", msg}}}};
  std::cerr << err.dump() << "\n";
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Reduced quivers of skew group algebras with exact "
               "cyclotomic arithmetic"};
  app.require_subcommand(1);

  std::string instance, dot, dot_q, json_out, comb, fixtures, golden;
  bool fast = false, slow = false, both = false, no_verify = false;
  Source src;

  auto *red = app.add_subcommand("reduce", "Build the reduced quiver");
  red->add_option("instance", instance, "Instance JSON file")->required();
  red->add_option("--dot", dot, "Write the reduced quiver as DOT ('-' for stdout)");
  red->add_option("--dot-quiver", dot_q, "Write the input quiver as DOT");
  red->add_option("--json", json_out, "Write the reduced quiver as JSON");

  auto *tr = app.add_subcommand("transport",
                                "Express an element in paths of the reduced quiver");
  tr->add_option("instance", instance, "Instance JSON file")->required();
  src.add_options(tr);
  auto *f1 = tr->add_flag("--fast", fast, "Combinatorial pairing");
  auto *f2 = tr->add_flag("--slow", slow, "General pairing");
  auto *f3 = tr->add_flag("--both", both, "Compute both pairings and compare");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  tr->add_flag("--no-verify", no_verify, "Skip the round-trip check");
  tr->add_option("--json", json_out, "Write the combination as JSON");

  auto *ver = app.add_subcommand("verify",
                                 "Check a path combination against an element");
  ver->add_option("instance", instance, "Instance JSON file")->required();
  Source vsrc;
  vsrc.add_options(ver);
  ver->add_option("--comb", comb, "Combination JSON file")->required();

  auto *st = app.add_subcommand("selftest", "Run the invariant suites");
  fixtures = std::string(SKEWQ_DATA_DIR) + "/fixtures";
  golden = std::string(SKEWQ_DATA_DIR) + "/golden";
  st->add_option("--fixtures", fixtures, "Directory of instance files");
  st->add_option("--golden", golden, "Directory of golden files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (red->parsed())
      return cmd_reduce(instance, dot, dot_q, json_out);
    if (tr->parsed()) {
      PairingMode mode = fast   ? PairingMode::Fast
                         : slow ? PairingMode::Slow
                         : both ? PairingMode::Both
                                : PairingMode::Auto;
      return cmd_transport(instance, src, mode, no_verify, json_out);
    }
    if (ver->parsed())
      return cmd_verify(instance, vsrc, comb);
    if (st->parsed())
      return cmd_selftest(fixtures, golden);
  } catch (const ValidationError &e) {
    print_error("validation", e.what());
    return 2;
  } catch (const PreconditionError &e) {
    print_error("precondition", e.what());
    return 2;
  } catch (const ConsistencyError &e) {
    print_error("consistency", e.what());
    return 1;
  } catch (const std::exception &e) {
    print_error("internal", e.what());
    return 1;
  }
  return 0;
}
