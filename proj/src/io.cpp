#include "skewquiver/io.hpp"

#include "skewquiver/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace skq {

namespace {

[[noreturn]] void fail(const std::string &msg) { throw ValidationError(msg); }

Rational rational_from_json(const json &j) {
  try {
    if (j.is_number_integer())
      return Rational(j.get<long>());
    if (j.is_string()) {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0)
        fail("zero denominator in " + j.dump());
      q.canonicalize();
      return q;
    }
    if (j.is_array() && j.size() == 2) {
      auto part = [](const json &x) {
        return x.is_string() ? Integer(x.get<std::string>())
                             : Integer(x.get<long>());
      };
      Integer num = part(j[0]), den = part(j[1]);
      if (den == 0)
        fail("zero denominator in " + j.dump());
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument &) {
    fail("not a rational number: " + j.dump());
  } catch (const json::exception &) {
    fail("not a rational number: " + j.dump());
  }
  fail("not a rational number: " + j.dump());
}

const json &field(const json &obj, const char *key, const std::string &where) {
  if (!obj.is_object() || !obj.contains(key))
    fail(where + ": missing field '" + key + "'");
  return obj.at(key);
}

int int_field(const json &j, const std::string &where) {
  if (!j.is_number_integer())
    fail(where + ": expected an integer");
  return j.get<int>();
}

Elem elem_ref(const Group &G, const json &j, const std::string &where) {
  try {
    if (j.is_number_integer())
      return G.from_input(j.get<int>());
    if (j.is_string())
      return G.parse(j.get<std::string>());
  } catch (const ValidationError &e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": not a group element reference: " + j.dump());
}

int arrow_ref(const Quiver &Q, const json &j, const std::string &where) {
  if (!j.is_string())
    fail(where + ": arrow labels must be strings");
  auto id = Q.find(j.get<std::string>());
  if (!id)
    fail(where + ": unknown arrow '" + j.get<std::string>() + "'");
  return *id;
}

CycMatrix matrix_from_json(const json &j, int dim, const std::string &where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(where + ": expected a " + std::to_string(dim) + "x" +
         std::to_string(dim) + " matrix");
  CycMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != dim)
      fail(where + ": row " + std::to_string(r) + " has the wrong length");
    for (int c = 0; c < dim; ++c)
      m(r, c) = cyc_from_json(j[r][c]);
  }
  return m;
}

Group group_from_json(const json &j) {
  if (j.contains("generators")) {
    std::vector<Group::Generator> gens;
    for (const auto &g : j.at("generators")) {
      Group::Generator x;
      x.name = field(g, "name", "group generator").get<std::string>();
      x.perm = field(g, "perm", "generator " + x.name).get<std::vector<int>>();
      gens.push_back(std::move(x));
    }
    if (gens.empty())
      fail("group: empty generator list");
    return Group::from_generators(gens);
  }
  const auto mul =
      field(j, "mul", "group").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && int_field(j.at("order"), "group order") !=
                                 static_cast<int>(mul.size()))
    fail("group: order does not match the size of the table");
  std::vector<std::string> names;
  if (j.contains("names"))
    names = j.at("names").get<std::vector<std::string>>();
  return Group::from_table(mul, names);
}

/// Breadth-first extension from a set of elements: returns (g, parent,
/// generator index) with g = parent * gens[index], parents listed first.
std::vector<std::tuple<Elem, Elem, int>>
extension_order(const Group &G, const std::vector<Elem> &gens,
                const std::string &what) {
  std::vector<std::tuple<Elem, Elem, int>> order;
  std::vector<char> seen(G.order(), 0);
  seen[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int k = 0; k < static_cast<int>(gens.size()); ++k) {
      const Elem h = G.mul(queue[q], gens[k]);
      if (!seen[h]) {
        seen[h] = 1;
        queue.push_back(h);
        order.emplace_back(h, queue[q], k);
      }
    }
  if (static_cast<int>(queue.size()) != G.order())
    fail(what + ": the listed elements do not generate the group");
  return order;
}

/// Per-element data given either as an array in input element order or as
/// an object keyed by element references (extended multiplicatively).
template <class T, class Parse, class Compose>
std::vector<T> per_element(const Group &G, const json &j, const T &identity,
                           const std::string &what, Parse parse,
                           Compose compose) {
  std::vector<T> out(G.order());
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != G.order())
      fail(what + ": expected one entry per group element");
    for (int idx = 0; idx < G.order(); ++idx)
      out[G.from_input(idx)] = parse(j[idx], what + "[" + std::to_string(idx) + "]");
    return out;
  }
  if (!j.is_object())
    fail(what + ": expected an array or an object keyed by group elements");
  std::vector<Elem> gens;
  std::map<Elem, T> given;
  for (const auto &[key, val] : j.items()) {
    const Elem g = elem_ref(G, json(key), what);
    gens.push_back(g);
    given[g] = parse(val, what + "." + key);
  }
  out[0] = identity;
  for (const auto &[g, parent, k] : extension_order(G, gens, what))
    out[g] = compose(out[parent], given.at(gens[k]));
  // Data on listed elements must agree with the extension.
  for (const auto &[g, val] : given)
    if (!(out[g] == val))
      fail(what + ": data for '" + G.name(g) +
           "' is inconsistent with the data on the other listed elements");
  return out;
}

ArrowComb arrow_image(const Quiver &Q, const json &j, const std::string &where) {
  ArrowComb out;
  if (j.is_string()) {
    out.push_back({arrow_ref(Q, j, where), Cyc(1)});
  } else if (j.is_array() && j.size() == 2 && j[1].is_string()) {
    out.push_back({arrow_ref(Q, j[1], where), cyc_from_json(j[0])});
  } else if (j.is_array()) {
    for (const auto &t : j) {
      if (!t.is_array() || t.size() != 2 || !t[1].is_string())
        fail(where + ": expected [coeff, arrow] pairs");
      out.push_back({arrow_ref(Q, t[1], where), cyc_from_json(t[0])});
    }
  } else {
    fail(where + ": malformed arrow image " + j.dump());
  }
  return out;
}

using ArrowImages = std::vector<ArrowComb>;

ArrowImages normalize(ArrowImages x) {
  for (auto &comb : x) {
    std::map<int, Cyc> acc;
    for (const auto &[b, c] : comb)
      acc[b] += c;
    comb.clear();
    for (const auto &[b, c] : acc)
      if (!c.is_zero())
        comb.push_back({b, c});
  }
  return x;
}

void check_conductor(const Cyc &c, int n, const std::string &where) {
  if (n % c.conductor() != 0)
    fail(where + ": scalar " + c.to_string() + " does not lie in Q(zeta_" +
         std::to_string(n) + ")");
}

} // namespace

Cyc cyc_from_json(const json &j) {
  if (j.is_object()) {
    if (j.contains("root")) {
      const json &r = j.at("root");
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
          !r[1].is_number_integer() || r[0].get<int>() < 1)
        fail("root: expected [n, k] with n >= 1");
      return Cyc::zeta(r[0].get<int>(), r[1].get<long>());
    }
    const int n = int_field(field(j, "conductor", "scalar"), "conductor");
    if (n < 1)
      fail("scalar: conductor must be positive");
    std::vector<Rational> coeffs;
    for (const auto &c : field(j, "coeffs", "scalar"))
      coeffs.push_back(rational_from_json(c));
    return Cyc::from_poly(n, std::move(coeffs));
  }
  return Cyc(rational_from_json(j));
}

json cyc_to_json(const Cyc &c) {
  json coeffs = json::array();
  for (const auto &q : c.coeffs())
    coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return {{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

Instance instance_from_json(const json &doc) {
  if (!doc.is_object())
    fail("instance: expected a JSON object");
  Instance inst;
  inst.name = doc.value("name", "");
  inst.group = group_from_json(field(doc, "group", "instance"));
  const Group &G = inst.group;
  const int nv = int_field(field(doc, "vertices", "instance"), "vertices");
  if (nv < 1)
    fail("instance: at least one vertex is required");

  ArrowSpace &M = inst.M;
  M.quiver.num_vertices = nv;
  for (const auto &a : field(doc, "arrows", "instance")) {
    Arrow x;
    x.label = field(a, "label", "arrow").get<std::string>();
    x.source = int_field(field(a, "source", "arrow " + x.label), "source");
    x.target = int_field(field(a, "target", "arrow " + x.label), "target");
    M.quiver.arrows.push_back(std::move(x));
  }
  M.quiver.index();
  const Quiver &Q = M.quiver;

  // Vertex action; defaults to the generator permutations when they act on
  // exactly the vertex set.
  std::vector<int> id_perm(nv);
  for (int v = 0; v < nv; ++v)
    id_perm[v] = v;
  auto parse_perm = [&](const json &j, const std::string &where) {
    if (!j.is_array() || static_cast<int>(j.size()) != nv)
      fail(where + ": expected a permutation of the " + std::to_string(nv) +
           " vertices");
    return j.get<std::vector<int>>();
  };
  auto compose_perm = [&](const std::vector<int> &p, const std::vector<int> &s) {
    std::vector<int> r(nv);
    for (int v = 0; v < nv; ++v) {
      if (s[v] < 0 || s[v] >= nv)
        fail("vertex_action: entry out of range");
      r[v] = p[s[v]];
    }
    return r;
  };
  json vact = doc.value("vertex_action", json());
  if (vact.is_null()) {
    const json &g = doc.at("group");
    if (!g.contains("generators"))
      fail("instance: vertex_action is required for table groups");
    vact = json::object();
    for (const auto &x : g.at("generators"))
      vact[x.at("name").get<std::string>()] = x.at("perm");
  }
  M.vact = per_element<std::vector<int>>(G, vact, id_perm, "vertex_action",
                                         parse_perm, compose_perm);
  validate_vertex_action(G, M.vact);

  // Arrow action.
  ArrowImages id_images(Q.num_arrows());
  for (int a = 0; a < Q.num_arrows(); ++a)
    id_images[a] = {{a, Cyc(1)}};
  auto parse_images = [&](const json &j, const std::string &where) {
    if (!j.is_object())
      fail(where + ": expected an object mapping arrow labels to images");
    ArrowImages im(Q.num_arrows());
    std::vector<char> seen(Q.num_arrows(), 0);
    for (const auto &[label, val] : j.items()) {
      const int a = arrow_ref(Q, json(label), where);
      im[a] = arrow_image(Q, val, where + "." + label);
      seen[a] = 1;
    }
    for (int a = 0; a < Q.num_arrows(); ++a)
      if (!seen[a])
        fail(where + ": no image given for arrow '" + Q.arrows[a].label + "'");
    return normalize(std::move(im));
  };
  auto compose_images = [&](const ArrowImages &p, const ArrowImages &s) {
    ArrowImages r(Q.num_arrows());
    for (int a = 0; a < Q.num_arrows(); ++a)
      for (const auto &[b, c] : s[a])
        for (const auto &[d, e] : p[b])
          r[a].push_back({d, c * e});
    return normalize(std::move(r));
  };
  if (Q.num_arrows() > 0) {
    M.image = per_element<ArrowImages>(G, field(doc, "arrow_action", "instance"),
                                       id_images, "arrow_action", parse_images,
                                       compose_images);
  } else {
    M.image.assign(G.order(), ArrowImages{});
  }
  validate_arrow_action(G, M);

  OrbitData orbits = compute_orbits(G, M.vact);
  auto orbit_rep = [&](const std::string &key, const std::string &what) {
    int v = -1;
    try {
      v = std::stoi(key);
    } catch (const std::exception &) {
      fail(what + ": key '" + key + "' is not a vertex");
    }
    if (v < 0 || v >= nv || orbits.reps[orbits.orbit_of[v]] != v)
      fail(what + ": vertex " + key + " is not the least vertex of its orbit");
    return v;
  };
  if (doc.contains("coset_reps")) {
    for (const auto &[key, list] : doc.at("coset_reps").items()) {
      const int v = orbit_rep(key, "coset_reps");
      std::vector<Elem> reps;
      for (const auto &r : list)
        reps.push_back(elem_ref(G, r, "coset_reps." + key));
      set_coset_reps(G, M.vact, orbits, orbits.orbit_of[v], reps);
      inst.coset_reps[v] = std::move(reps);
    }
  }
  if (doc.contains("irreps")) {
    for (const auto &[key, list] : doc.at("irreps").items()) {
      const int v = orbit_rep(key, "irreps");
      const Stabilizer &H = orbits.stabilizers[orbits.orbit_of[v]];
      std::vector<Irrep> irreps;
      for (const auto &r : list) {
        const std::string label = field(r, "label", "irrep").get<std::string>();
        const std::string where = "irrep " + label + " at vertex " + key;
        const int dim = int_field(field(r, "dim", where), where);
        if (dim < 1)
          fail(where + ": dimension must be positive");
        std::map<Elem, CycMatrix> gens;
        for (const auto &[ref, m] : field(r, "matrices", where).items()) {
          const Elem h = elem_ref(G, json(ref), where);
          if (!H.contains(h))
            fail(where + ": element '" + ref + "' is not in the stabilizer");
          gens[h] = matrix_from_json(m, dim, where + "." + ref);
        }
        irreps.push_back(irrep_from_generators(G, H, label, dim, gens));
      }
      validate_irreps(G, H, irreps);
      inst.irreps[v] = std::move(irreps);
    }
  }

  if (doc.contains("potential")) {
    Potential W;
    for (const auto &t : doc.at("potential")) {
      std::vector<int> cycle;
      for (const auto &l : field(t, "cycle", "potential term"))
        cycle.push_back(arrow_ref(Q, l, "potential"));
      W.terms.push_back({cycle, cyc_from_json(t.value("coeff", json(1)))});
    }
    validate_potential(Q, W);
    inst.potential = std::move(W);
  }

  if (doc.contains("conductor")) {
    inst.conductor = int_field(doc.at("conductor"), "conductor");
    if (inst.conductor < 1)
      fail("conductor must be positive");
    for (const auto &per_g : M.image)
      for (const auto &comb : per_g)
        for (const auto &[b, c] : comb)
          check_conductor(c, inst.conductor, "arrow_action");
    if (inst.potential)
      for (const auto &[cyc, c] : inst.potential->terms)
        check_conductor(c, inst.conductor, "potential");
  }
  return inst;
}

json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    fail(path + ": " + e.what());
  }
}

Instance load_instance(const std::string &path) {
  try {
    Instance inst = instance_from_json(load_json_file(path));
    if (inst.name.empty())
      inst.name = path;
    return inst;
  } catch (const json::exception &e) {
    fail(path + ": " + e.what());
  }
}

SkewElement element_from_json(const Setting &S, const json &doc) {
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  SkewElement x;
  try {
    for (const auto &t : field(doc, "terms", "element")) {
      Path p;
      for (const auto &l : t.value("path", json::array()))
        p.arrows.push_back(arrow_ref(Q, l, "element"));
      if (t.contains("start"))
        p.start = int_field(t.at("start"), "element start");
      else if (!p.arrows.empty())
        p.start = Q.arrows[p.arrows[0]].source;
      else
        fail("element: a lazy path needs a 'start' vertex");
      if (p.start < 0 || p.start >= Q.num_vertices ||
          (!p.arrows.empty() && Q.arrows[p.arrows[0]].source != p.start))
        fail("element: bad start vertex");
      if (!is_composable(Q, p))
        fail("element: path is not composable");
      const Elem g = elem_ref(G, t.value("group", json(0)), "element");
      x.add(SkewKey{p, g}, cyc_from_json(t.value("coeff", json(1))));
    }
  } catch (const json::exception &e) {
    fail(std::string("element: ") + e.what());
  }
  return x;
}

json element_to_json(const Setting &S, const SkewElement &x) {
  const Group &G = S.group();
  const Quiver &Q = S.quiver();
  json terms = json::array();
  for (const auto &[k, c] : x.terms()) {
    json path = json::array();
    for (int a : k.path.arrows)
      path.push_back(Q.arrows[a].label);
    terms.push_back({{"path", path},
                     {"start", k.path.start},
                     {"group", G.name(k.g)},
                     {"coeff", cyc_to_json(c)}});
  }
  return {{"terms", terms}};
}

json intertwiner_to_json(const Setting &S, const Intertwiner &f) {
  const InducedModule &M = module_of(S, f);
  const Group &G = S.group();
  const int dv = M.dim_v();
  json out = json::array();
  for (std::size_t k = 0; k < f.coords.cols(); ++k)
    for (int pi = 0; pi < M.num_paths(); ++pi)
      for (int l = 0; l < dv; ++l) {
        const Cyc &c = f.coords(pi * dv + l, k);
        if (c.is_zero())
          continue;
        json y = json::array();
        for (Elem e : M.paths()[pi].y)
          y.push_back(G.to_input(e));
        out.push_back({k, y, M.paths()[pi].path.arrows, l, cyc_to_json(c)});
      }
  return out;
}

json qg_to_json(const QG &qg) {
  const Setting &S = qg.setting();
  json vertices = json::array();
  for (int v = 0; v < qg.num_vertices(); ++v) {
    const QGVertex &x = S.vertex(v);
    vertices.push_back({{"id", v},
                        {"orbit_rep", x.rep_vertex},
                        {"irrep", x.label},
                        {"dim", x.rho.dim}});
  }
  json arrows = json::array();
  std::map<std::pair<int, int>, int> mult;
  for (const auto &a : qg.arrows()) {
    ++mult[{a.source, a.target}];
    arrows.push_back({{"id", a.id},
                      {"label", a.label},
                      {"source", a.source},
                      {"target", a.target},
                      {"intertwiner", intertwiner_to_json(S, a.f)},
                      {"dual", intertwiner_to_json(S, a.dual)}});
  }
  json m = json::array();
  for (const auto &[st, n] : mult)
    m.push_back({{"source", st.first}, {"target", st.second}, {"count", n}});
  return {{"vertices", vertices},
          {"arrows", arrows},
          {"multiplicities", m},
          {"counts",
           {{"vertices", qg.num_vertices()}, {"arrows", qg.num_arrows()}}}};
}

std::string qg_report(const QG &qg) {
  const Setting &S = qg.setting();
  std::ostringstream os;
  os << qg.num_vertices() << " vertices, " << qg.num_arrows() << " arrows\n";
  for (int v = 0; v < qg.num_vertices(); ++v)
    os << "  vertex " << v << ": " << qg.vertex_label(v)
       << " dim " << S.vertex(v).rho.dim << "\n";
  std::map<std::pair<int, int>, int> mult;
  for (const auto &a : qg.arrows())
    ++mult[{a.source, a.target}];
  for (const auto &[st, n] : mult)
    os << "  " << qg.vertex_label(st.first) << " -> "
       << qg.vertex_label(st.second) << ": " << n << "\n";
  return os.str();
}

json comb_to_json(const QG &qg, const PathComb &c) {
  json paths = json::array();
  for (const auto &[p, x] : c) {
    json arrows = json::array();
    for (int a : p.arrows)
      arrows.push_back(qg.arrow(a).label);
    paths.push_back({{"arrows", arrows},
                     {"vertex", p.start},
                     {"coeff", cyc_to_json(x)}});
  }
  return {{"paths", paths}};
}

PathComb comb_from_json(const QG &qg, const json &doc) {
  std::map<std::string, int> by_label;
  for (const auto &a : qg.arrows())
    by_label[a.label] = a.id;
  PathComb out;
  try {
    for (const auto &t : field(doc, "paths", "combination")) {
      Path p;
      for (const auto &l : t.at("arrows")) {
        auto it = by_label.find(l.get<std::string>());
        if (it == by_label.end())
          fail("combination: unknown arrow '" + l.get<std::string>() + "'");
        p.arrows.push_back(it->second);
      }
      p.start = p.arrows.empty() ? int_field(field(t, "vertex", "path"), "vertex")
                                 : qg.arrow(p.arrows[0]).source;
      if (p.start < 0 || p.start >= qg.num_vertices())
        fail("combination: bad vertex");
      for (std::size_t i = 1; i < p.arrows.size(); ++i)
        if (qg.arrow(p.arrows[i - 1]).target != qg.arrow(p.arrows[i]).source)
          fail("combination: path is not composable");
      comb_add(out, p, cyc_from_json(field(t, "coeff", "path")));
    }
  } catch (const json::exception &e) {
    fail(std::string("combination: ") + e.what());
  }
  return out;
}

namespace {

std::string dot_escape(const std::string &s) {
  std::string r;
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      r += '\\';
    r += ch;
  }
  return r;
}

} // namespace

std::string quiver_dot(const Setting &S) {
  const Quiver &Q = S.quiver();
  std::ostringstream os;
  os << "digraph Q {\n";
  for (int v = 0; v < Q.num_vertices; ++v)
    os << "  v" << v << " [label=\"" << v << "\"];\n";
  for (const auto &a : Q.arrows)
    os << "  v" << a.source << " -> v" << a.target << " [label=\""
       << dot_escape(a.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string qg_dot(const QG &qg) {
  std::ostringstream os;
  os << "digraph QG {\n";
  for (int v = 0; v < qg.num_vertices(); ++v)
    os << "  v" << v << " [label=\"" << dot_escape(qg.vertex_label(v))
       << "\"];\n";
  for (const auto &a : qg.arrows())
    os << "  v" << a.source << " -> v" << a.target << " [label=\""
       << dot_escape(a.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace skq
