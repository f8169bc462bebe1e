#include "rigdim/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "rigdim/errors.hpp"
#include "rigdim/matrix.hpp"

namespace rigdim {

std::optional<std::size_t> Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

void Quiver::validate() const {
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw Error("duplicate vertex name");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second) throw Error("duplicate arrow name '" + a.name + "'");
    if (a.source >= vertices.size() || a.target >= vertices.size())
      throw Error("arrow '" + a.name + "' has a missing endpoint");
  }
}

Algebra::Algebra(Data data) : d_(std::move(data)) {}

std::size_t Algebra::loewy_length() const {
  std::size_t ll = 0;
  for (const auto& b : d_.basis) ll = std::max(ll, b.degree + 1);
  return ll;
}

std::size_t Algebra::in_degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(arrows().begin(), arrows().end(),
                                                [v](const Arrow& a) { return a.target == v; }));
}

std::size_t Algebra::out_degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(arrows().begin(), arrows().end(),
                                                [v](const Arrow& a) { return a.source == v; }));
}

bool Algebra::is_nakayama() const {
  for (std::size_t v = 0; v < num_vertices(); ++v)
    if (in_degree(v) > 1 || out_degree(v) > 1) return false;
  return true;
}

std::vector<std::vector<std::size_t>> Algebra::components() const {
  std::vector<std::size_t> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows()) parent[find(a.source)] = find(a.target);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < num_vertices(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, vs] : groups) out.push_back(vs);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Scalar> Algebra::multiply(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
  const Field& f = field();
  std::vector<Scalar> out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (u[a] == 0) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (v[b] == 0) continue;
      Scalar c = f.mul(u[a], v[b]);
      for (const auto& [idx, coeff] : product(a, b)) out[idx] = f.add(out[idx], f.mul(c, coeff));
    }
  }
  return out;
}

AlgebraPtr Algebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (auto back = op_weak_.lock()) return back;
  if (op_strong_) return op_strong_;
  Data od;
  od.field = d_.field;
  od.quiver.vertices = d_.quiver.vertices;
  for (const auto& a : d_.quiver.arrows) od.quiver.arrows.push_back({a.name, a.target, a.source});
  for (const auto& b : d_.basis) {
    BasisElement ob{b.target, b.source, b.degree, Path(b.path.rbegin(), b.path.rend())};
    od.basis.push_back(std::move(ob));
  }
  od.idempotents = d_.idempotents;
  od.arrow_elements = d_.arrow_elements;
  const std::size_t n = dim();
  od.products.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) od.products[a * n + b] = d_.products[b * n + a];
  for (const auto& r : d_.relations) {
    Relation orl;
    orl.text = r.text + " (mirrored)";
    for (const auto& t : r.terms) orl.terms.push_back({t.coeff, Path(t.path.rbegin(), t.path.rend())});
    od.relations.push_back(std::move(orl));
  }
  od.has_presentation = d_.has_presentation;
  auto op = std::make_shared<Algebra>(std::move(od));
  op->op_weak_ = weak_from_this();
  op_strong_ = op;
  return op;
}

bool Algebra::same_structure(const Algebra& o) const {
  if (!(field() == o.field()) || d_.quiver.vertices != o.d_.quiver.vertices) return false;
  if (arrows().size() != o.arrows().size() || dim() != o.dim()) return false;
  for (std::size_t i = 0; i < arrows().size(); ++i) {
    const auto &a = arrows()[i], &b = o.arrows()[i];
    if (a.name != b.name || a.source != b.source || a.target != b.target) return false;
  }
  for (std::size_t i = 0; i < dim(); ++i)
    if (d_.basis[i].path != o.d_.basis[i].path || d_.basis[i].source != o.d_.basis[i].source) return false;
  return d_.products == o.d_.products;
}

std::string Algebra::path_label(const Path& p, std::size_t vertex) const {
  if (p.empty()) return "e" + vertex_name(vertex);
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "*";
    s += arrows()[p[i]].name;
  }
  return s;
}

AlgebraPtr make_algebra(Algebra::Data data) {
  const std::size_t n = data.basis.size();
  if (data.products.size() != n * n) throw DimensionMismatch("structure constants size");
  if (data.idempotents.size() != data.quiver.vertices.size()) throw DimensionMismatch("idempotents");
  if (data.arrow_elements.size() != data.quiver.arrows.size()) throw DimensionMismatch("arrow elements");
  return std::make_shared<Algebra>(std::move(data));
}

AlgebraPtr opposite(const AlgebraPtr& alg) { return alg->opposite(); }

namespace {

std::size_t path_source(const Quiver& q, const Path& p) { return q.arrows[p.front()].source; }
std::size_t path_target(const Quiver& q, const Path& p) { return q.arrows[p.back()].target; }

bool composable(const Quiver& q, const Path& p) {
  for (std::size_t i = 1; i < p.size(); ++i)
    if (q.arrows[p[i - 1]].target != q.arrows[p[i]].source) return false;
  return true;
}

struct PathLess {
  const Quiver* q;
  bool operator()(const Path& a, const Path& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [this](std::size_t x, std::size_t y) {
      return q->arrows[x].name < q->arrows[y].name;
    });
  }
};

struct Degree {
  std::vector<Path> paths;  // ascending
  std::map<Path, std::size_t> index;
  std::vector<std::vector<Scalar>> ideal;  // rows in path coordinates
  std::vector<SparseVector> normal_form;   // per path, in global basis indices
};

void check_relation(const Quiver& q, const Relation& r) {
  if (r.terms.empty()) return;
  const std::size_t len = r.terms.front().path.size();
  for (const auto& t : r.terms) {
    if (t.path.size() < 2) throw NotAdmissible("relation '" + r.text + "' has a term of length < 2");
    if (!composable(q, t.path)) throw NotAdmissible("relation '" + r.text + "' contains a non-path");
    if (t.path.size() != len) throw NotHomogeneous("relation '" + r.text + "' is not length-homogeneous");
  }
  const std::size_t s = path_source(q, r.terms.front().path), e = path_target(q, r.terms.front().path);
  for (const auto& t : r.terms)
    if (path_source(q, t.path) != s || path_target(q, t.path) != e)
      throw NotAdmissible("relation '" + r.text + "' mixes endpoints");
}

}  // namespace

AlgebraPtr build_algebra(Field field, Quiver quiver, std::vector<Relation> relations, std::size_t max_path_length) {
  quiver.validate();
  for (auto& r : relations) {
    for (auto& t : r.terms) t.coeff = field.normalize(t.coeff);
    check_relation(quiver, r);
  }
  PathLess less{&quiver};
  Algebra::Data data;
  data.field = field;
  data.relations = relations;
  data.has_presentation = true;

  const std::size_t nv = quiver.vertices.size();
  for (std::size_t v = 0; v < nv; ++v) {
    data.basis.push_back({v, v, 0, {}});
    data.idempotents.push_back(v);
  }

  std::vector<Degree> degrees(1);
  std::size_t nilpotency = 0;
  for (std::size_t d = 1;; ++d) {
    if (d > max_path_length)
      throw NotFiniteDimensional("no vanishing degree up to max_path_length " + std::to_string(max_path_length));
    Degree cur;
    if (d == 1) {
      for (std::size_t a = 0; a < quiver.arrows.size(); ++a) cur.paths.push_back({a});
    } else {
      for (const auto& p : degrees[d - 1].paths)
        for (std::size_t a = 0; a < quiver.arrows.size(); ++a)
          if (quiver.arrows[a].source == path_target(quiver, p)) {
            Path q = p;
            q.push_back(a);
            cur.paths.push_back(std::move(q));
          }
    }
    std::sort(cur.paths.begin(), cur.paths.end(), less);
    if (cur.paths.size() > 200000) throw NotFiniteDimensional("path space too large at degree " + std::to_string(d));
    for (std::size_t i = 0; i < cur.paths.size(); ++i) cur.index[cur.paths[i]] = i;
    const std::size_t np = cur.paths.size();

    std::vector<std::vector<Scalar>> gens;
    for (const auto& r : relations) {
      if (r.terms.empty() || r.terms.front().path.size() != d) continue;
      std::vector<Scalar> row(np);
      for (const auto& t : r.terms) {
        auto& x = row[cur.index.at(t.path)];
        x = field.add(x, t.coeff);
      }
      gens.push_back(std::move(row));
    }
    if (d >= 2) {
      const Degree& prev = degrees[d - 1];
      for (const auto& x : prev.ideal)
        for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
          std::vector<Scalar> right(np), left(np);
          bool any_r = false, any_l = false;
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            const Path& p = prev.paths[i];
            if (path_target(quiver, p) == quiver.arrows[a].source) {
              Path q = p;
              q.push_back(a);
              right[cur.index.at(q)] = x[i];
              any_r = true;
            }
            if (quiver.arrows[a].target == path_source(quiver, p)) {
              Path q{a};
              q.insert(q.end(), p.begin(), p.end());
              left[cur.index.at(q)] = x[i];
              any_l = true;
            }
          }
          if (any_r) gens.push_back(std::move(right));
          if (any_l) gens.push_back(std::move(left));
        }
    }

    // Columns in descending path order so pivots land on the largest paths.
    Matrix m(field, gens.size(), np);
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (std::size_t c = 0; c < np; ++c) m.set_raw(r, np - 1 - c, gens[r][c]);
    Reduction red = reduce(m);
    std::vector<bool> pivot(np, false);
    std::vector<std::size_t> pivot_row(np, 0);
    for (std::size_t i = 0; i < red.rank; ++i) {
      std::size_t path_idx = np - 1 - red.pivots[i];
      pivot[path_idx] = true;
      pivot_row[path_idx] = i;
    }
    for (std::size_t i = 0; i < red.rank; ++i) {
      std::vector<Scalar> row(np);
      for (std::size_t c = 0; c < np; ++c) row[c] = red.rref.at(i, np - 1 - c);
      cur.ideal.push_back(std::move(row));
    }

    std::vector<std::size_t> global(np, 0);
    std::size_t kept = 0;
    for (std::size_t i = 0; i < np; ++i)
      if (!pivot[i]) {
        global[i] = data.basis.size();
        const Path& p = cur.paths[i];
        data.basis.push_back({path_source(quiver, p), path_target(quiver, p), d, p});
        ++kept;
      }
    cur.normal_form.resize(np);
    for (std::size_t i = 0; i < np; ++i) {
      if (!pivot[i]) {
        cur.normal_form[i] = {{global[i], Scalar(1)}};
        continue;
      }
      const std::size_t r = pivot_row[i];
      for (std::size_t c = 0; c < np; ++c) {
        if (c == i || pivot[c]) continue;
        const Scalar& v = red.rref.at(r, np - 1 - c);
        if (v != 0) cur.normal_form[i].push_back({global[c], field.neg(v)});
      }
    }
    degrees.push_back(std::move(cur));
    if (kept == 0) {
      nilpotency = d;
      break;
    }
  }

  data.quiver = quiver;
  for (std::size_t a = 0; a < quiver.arrows.size(); ++a) {
    const auto& nf = degrees[1].normal_form[degrees[1].index.at(Path{a})];
    if (nf.size() != 1 || nf[0].second != 1) throw NotAdmissible("an arrow vanishes in the quotient");
    data.arrow_elements.push_back(nf[0].first);
  }

  const std::size_t n = data.basis.size();
  data.products.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto &ea = data.basis[a], &eb = data.basis[b];
      if (ea.target != eb.source) continue;
      if (ea.path.empty()) {
        data.products[a * n + b] = {{b, Scalar(1)}};
        continue;
      }
      if (eb.path.empty()) {
        data.products[a * n + b] = {{a, Scalar(1)}};
        continue;
      }
      const std::size_t len = ea.path.size() + eb.path.size();
      if (len >= nilpotency) continue;
      Path p = ea.path;
      p.insert(p.end(), eb.path.begin(), eb.path.end());
      const Degree& dg = degrees[len];
      data.products[a * n + b] = dg.normal_form[dg.index.at(p)];
    }
  return std::make_shared<Algebra>(std::move(data));
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->field() == b->field())) throw FieldMismatch("direct_product over different fields");
  Algebra::Data d;
  d.field = a->field();
  const std::size_t nva = a->num_vertices(), na = a->arrows().size(), da = a->dim();
  std::set<std::string> vnames(a->quiver().vertices.begin(), a->quiver().vertices.end());
  std::set<std::string> anames;
  for (const auto& ar : a->arrows()) anames.insert(ar.name);
  d.quiver = a->quiver();
  for (const auto& v : b->quiver().vertices) {
    std::string name = v;
    while (vnames.count(name)) name += "'";
    vnames.insert(name);
    d.quiver.vertices.push_back(name);
  }
  for (const auto& ar : b->arrows()) {
    std::string name = ar.name;
    while (anames.count(name)) name += "'";
    anames.insert(name);
    d.quiver.arrows.push_back({name, ar.source + nva, ar.target + nva});
  }
  d.basis = a->basis();
  for (auto be : b->basis()) {
    be.source += nva;
    be.target += nva;
    for (auto& x : be.path) x += na;
    d.basis.push_back(std::move(be));
  }
  d.idempotents = a->data().idempotents;
  for (auto i : b->data().idempotents) d.idempotents.push_back(i + da);
  d.arrow_elements = a->data().arrow_elements;
  for (auto i : b->data().arrow_elements) d.arrow_elements.push_back(i + da);
  const std::size_t n = da + b->dim();
  d.products.assign(n * n, {});
  for (std::size_t x = 0; x < da; ++x)
    for (std::size_t y = 0; y < da; ++y) d.products[x * n + y] = a->product(x, y);
  for (std::size_t x = 0; x < b->dim(); ++x)
    for (std::size_t y = 0; y < b->dim(); ++y) {
      SparseVector sv = b->product(x, y);
      for (auto& e : sv) e.first += da;
      d.products[(x + da) * n + y + da] = std::move(sv);
    }
  d.relations = a->relations();
  for (auto r : b->relations()) {
    for (auto& t : r.terms)
      for (auto& x : t.path) x += na;
    d.relations.push_back(std::move(r));
  }
  d.has_presentation = a->has_presentation() && b->has_presentation();
  return std::make_shared<Algebra>(std::move(d));
}

Relation parse_relation(const Field& field, const Quiver& quiver, const std::string& text) {
  Relation rel;
  rel.text = text;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) { throw ParseError("relation '" + text + "': " + why); };
  bool first = true;
  skip();
  if (i == text.size()) fail("empty");
  while (i < text.size()) {
    long sign = 1;
    skip();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Term term{Scalar(sign), {}};
    bool expect_factor = true;
    while (expect_factor) {
      skip();
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' || text[i] == '\''))
        ++i;
      std::string tok = text.substr(start, i - start);
      if (tok.empty()) fail("expected an arrow name or coefficient");
      bool numeric = std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
      if (numeric) {
        if (!term.path.empty()) fail("coefficient must precede the path");
        term.coeff *= Scalar(mpz_class(tok));
      } else {
        auto a = quiver.arrow_index(tok);
        if (!a) fail("unknown arrow '" + tok + "'");
        term.path.push_back(*a);
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
      } else {
        expect_factor = false;
      }
    }
    if (term.path.empty()) fail("term without a path");
    term.coeff = field.normalize(term.coeff);
    rel.terms.push_back(std::move(term));
    skip();
  }
  // Merge equal paths.
  std::map<Path, Scalar> merged;
  std::vector<Path> order;
  for (const auto& t : rel.terms) {
    if (!merged.count(t.path)) {
      order.push_back(t.path);
      merged[t.path] = 0;
    }
    merged[t.path] = field.add(merged[t.path], t.coeff);
  }
  rel.terms.clear();
  for (const auto& p : order)
    if (merged[p] != 0) rel.terms.push_back({merged[p], p});
  return rel;
}

namespace fixtures {

namespace {

AlgebraPtr make(Field f, std::vector<std::string> vs, std::vector<Arrow> arrows, std::vector<std::string> rels) {
  Quiver q{std::move(vs), std::move(arrows)};
  std::vector<Relation> rs;
  for (const auto& r : rels) rs.push_back(parse_relation(f, q, r));
  return build_algebra(f, q, rs);
}

}  // namespace

AlgebraPtr a2(Field f) { return make(f, {"1", "2"}, {{"alpha", 0, 1}}, {}); }

AlgebraPtr a3(Field f) { return make(f, {"1", "2", "3"}, {{"alpha", 0, 1}, {"beta", 1, 2}}, {}); }

AlgebraPtr a3r(Field f) {
  return make(f, {"1", "2", "3"}, {{"alpha", 0, 1}, {"beta", 1, 2}}, {"alpha*beta"});
}

AlgebraPtr cyc2(Field f) { return cyclic_nakayama(2, f); }

AlgebraPtr dual_numbers(Field f) { return truncated_poly(2, f); }

AlgebraPtr truncated_poly(std::size_t n, Field f) {
  std::string rel = "x";
  for (std::size_t i = 1; i < n; ++i) rel += "*x";
  return make(f, {"1"}, {{"x", 0, 0}}, {rel});
}

AlgebraPtr cyclic_nakayama(std::size_t e, Field f) {
  std::vector<std::string> vs;
  std::vector<Arrow> arrows;
  std::vector<std::string> rels;
  auto name = [e](std::size_t i) {
    if (e == 2) return std::string(i == 0 ? "alpha" : "beta");
    return "a" + std::to_string(i + 1);
  };
  for (std::size_t i = 0; i < e; ++i) {
    vs.push_back(std::to_string(i + 1));
    arrows.push_back({name(i), i, (i + 1) % e});
  }
  for (std::size_t i = 0; i < e; ++i) rels.push_back(name(i) + "*" + name((i + 1) % e));
  return make(f, vs, arrows, rels);
}

AlgebraPtr semisimple(std::size_t n, Field f) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
  return make(f, vs, {}, {});
}

}  // namespace fixtures

}  // namespace rigdim
