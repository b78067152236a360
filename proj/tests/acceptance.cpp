// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "skewquiver/checks.hpp"
#include "skewquiver/errors.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace skq;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

const std::string data_dir = SKEWQ_DATA_DIR;

struct Loaded {
  std::string name;
  std::unique_ptr<Setting> S;
  std::unique_ptr<QG> qg;
};

std::vector<Loaded> load_fixtures() {
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(data_dir + "/fixtures"))
    if (e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<Loaded> out;
  for (const auto &f : files) {
    Loaded l;
    l.name = f.stem().string();
    l.S = std::make_unique<Setting>(load_instance(f.string()));
    l.qg = std::make_unique<QG>(*l.S);
    out.push_back(std::move(l));
  }
  return out;
}

// Collects failures of a criterion; the first few are printed.
struct Outcome {
  std::vector<std::string> failures;
  std::ostringstream info;
  void require(bool ok, const std::string &what) {
    if (!ok)
      failures.push_back(what);
  }
  void suite(const std::string &fixture, const CheckResult &r) {
    require(r.passed, r.name + " [" + fixture + "]: " + r.detail);
  }
};

int failed = 0;

void criterion(int id, const std::string &title, double limit_s,
               const std::function<void(Outcome &)> &body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception &e) {
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream m;
    m << "took " << secs << " s, limit " << limit_s << " s";
    o.failures.push_back(m.str());
  }
  const bool ok = o.failures.empty();
  failed += !ok;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title
            << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)";
  if (!o.info.str().empty())
    std::cout << " " << o.info.str();
  std::cout << "\n";
  for (std::size_t k = 0; k < o.failures.size() && k < 5; ++k)
    std::cout << "    " << o.failures[k] << "\n";
}

} // namespace

int main() {
  std::vector<Loaded> fixtures;
  try {
    fixtures = load_fixtures();
  } catch (const std::exception &e) {
    std::cout << "FAIL loading fixtures: " << e.what() << "\n";
    return 1;
  }
  Rng rng(20240611);

  criterion(1, "dihedral reduced quiver and idempotents", 5.0, [](Outcome &o) {
    const Setting S(load_instance(data_dir + "/fixtures/dihedral10.json"));
    const QG qg(S);
    o.require(qg.num_vertices() == 2, "expected 2 vertices, got " +
                                          std::to_string(qg.num_vertices()));
    o.require(qg.num_arrows() == 4,
              "expected 4 arrows, got " + std::to_string(qg.num_arrows()));
    for (int u = 0; u < qg.num_vertices(); ++u)
      for (int v = 0; v < qg.num_vertices(); ++v) {
        int n = 0;
        for (const auto &a : qg.arrows())
          n += a.source == u && a.target == v;
        o.require(n == 1, "multiplicity " + std::to_string(n) + " for " +
                              qg.vertex_label(u) + " -> " + qg.vertex_label(v));
      }
    // eps_s = 1/2 (e + (-1)^s t)
    const Group &G = S.group();
    const Elem t = G.parse("t");
    for (const auto &x : S.vertices()) {
      GroupAlgElem want;
      ga_add(want, 0, Cyc(Rational(1, 2)));
      ga_add(want, t, Cyc(Rational(x.irrep % 2 ? -1 : 1, 2)));
      o.require(x.eps == want, "idempotent of " + x.label + " differs");
    }
    o.info << "2 vertices, 4 arrows";
  });

  criterion(2, "dihedral potential transport and table values", 30.0,
            [](Outcome &o) {
              const Setting S(
                  load_instance(data_dir + "/fixtures/dihedral10.json"));
              const QG qg(S);
              const PathComb c =
                  transport_potential(qg, *S.instance().potential).comb;
              int nonzero = 0;
              for (const auto &p : qg.paths(5)) {
                const int r = S.vertex(p.start).irrep;
                const int w = S.vertex(qg.path_end(p)).irrep;
                const Cyc want = (r + w) % 2 == 0 ? Cyc(-2) : Cyc(0);
                auto it = c.find(p);
                const Cyc got = it == c.end() ? Cyc(0) : it->second;
                nonzero += !got.is_zero();
                o.require(got == want, render_path(qg, p) + ": expected " +
                                           want.to_string() + ", got " +
                                           got.to_string());
              }
              o.require(c.size() == 32 && nonzero == 32,
                        "expected 32 nonzero terms, got " +
                            std::to_string(c.size()));
              const CheckResult g = check_golden(
                  qg, load_json_file(data_dir +
                                     "/golden/dihedral10.golden.json"));
              o.suite("dihedral10", g);
              o.info << nonzero << " paths with coefficient -2, " << g.cases
                     << " golden values";
            });

  criterion(3, "round trip on random homogeneous elements", 0,
            [&](Outcome &o) {
              std::size_t cases = 0;
              for (const auto &f : fixtures) {
                const CheckResult r = check_roundtrip(*f.qg, rng, 50, 3);
                cases += r.cases;
                o.suite(f.name, r);
              }
              o.info << cases << " elements over " << fixtures.size()
                     << " fixtures";
            });

  criterion(4, "algebra laws", 0, [&](Outcome &o) {
    std::size_t cases = 0;
    for (const auto &f : fixtures)
      for (const CheckResult &r :
           {check_eq12(*f.qg), check_associativity(*f.qg, rng, 100),
            check_pairing_compat(*f.qg, rng, 100),
            check_biorthogonality(*f.qg, 3)}) {
        cases += r.cases;
        o.suite(f.name, r);
      }
    o.info << cases << " cases";
  });

  criterion(5, "graded dimensions up to degree 3", 0, [&](Outcome &o) {
    for (const auto &f : fixtures)
      o.suite(f.name, check_graded_dimension(*f.qg, 3));
  });

  criterion(6, "fast and general pairing agree", 0, [&](Outcome &o) {
    int applicable = 0;
    for (const auto &f : fixtures) {
      const CheckResult r = check_fast_slow(*f.qg, rng, 10);
      applicable += r.applicable;
      o.suite(f.name, r);
    }
    o.require(applicable > 0, "no fixture admits the combinatorial pairing");
    o.info << applicable << " applicable fixtures";
  });

  criterion(7, "foundation suites", 0, [&](Outcome &o) {
    o.suite("", check_field_axioms(rng, 500));
    o.suite("", check_cyclotomic_polynomials(120));
    for (const auto &f : fixtures) {
      o.suite(f.name, check_group(*f.S));
      o.suite(f.name, check_idempotents(*f.S));
    }
  });

  return failed == 0 ? 0 : 1;
}
