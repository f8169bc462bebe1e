#include "rigdim/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "rigdim/errors.hpp"

namespace rigdim {

namespace {

class TomlParser {
 public:
  explicit TomlParser(const std::string& s) : s_(s) {}

  Json run() {
    Json root = Json::object();
    Json* current = &root;
    for (;;) {
      skip_blank();
      if (eof()) break;
      if (peek() == '[') {
        current = &header(root);
      } else {
        auto keys = key_path();
        skip_ws();
        expect('=');
        skip_ws();
        Json v = value();
        assign(*current, keys, std::move(v));
      }
      end_of_line();
    }
    return root;
  }

 private:
  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[i_]; }
  char next() {
    char c = s_[i_++];
    if (c == '\n') ++line_;
    return c;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("line " + std::to_string(line_) + ": " + why);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    next();
  }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) next();
  }

  void skip_comment() {
    if (peek() == '#')
      while (!eof() && peek() != '\n') next();
  }

  /// Whitespace, comments and newlines.
  void skip_blank() {
    for (;;) {
      skip_ws();
      skip_comment();
      if (peek() == '\n') {
        next();
        continue;
      }
      return;
    }
  }

  void end_of_line() {
    skip_ws();
    skip_comment();
    if (eof()) return;
    if (peek() != '\n') fail("unexpected trailing characters");
    next();
  }

  std::string key() {
    if (peek() == '"' || peek() == '\'') return string_value();
    std::string k;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) k += next();
    if (k.empty()) fail("expected a key");
    return k;
  }

  std::vector<std::string> key_path() {
    std::vector<std::string> keys{key()};
    for (;;) {
      skip_ws();
      if (peek() != '.') return keys;
      next();
      skip_ws();
      keys.push_back(key());
    }
  }

  Json& header(Json& root) {
    next();
    bool array = false;
    if (peek() == '[') {
      next();
      array = true;
    }
    skip_ws();
    auto keys = key_path();
    skip_ws();
    expect(']');
    if (array) expect(']');
    Json* node = &root;
    std::string path;
    for (std::size_t k = 0; k + 1 < keys.size(); ++k) {
      Json& child = (*node)[keys[k]];
      if (child.is_null()) child = Json::object();
      path += keys[k] + (child.is_array() ? "#" + std::to_string(child.size()) : "") + ".";
      node = child.is_array() ? &child.back() : &child;
      if (!node->is_object()) fail("key '" + keys[k] + "' is not a table");
    }
    Json& last = (*node)[keys.back()];
    if (array) {
      if (last.is_null()) last = Json::array();
      if (!last.is_array()) fail("key '" + keys.back() + "' is not an array of tables");
      last.push_back(Json::object());
      return last.back();
    }
    if (last.is_null()) last = Json::object();
    if (!last.is_object() || !tables_.insert(path + keys.back()).second)
      fail("table '" + keys.back() + "' defined twice");
    return last;
  }

  void assign(Json& table, const std::vector<std::string>& keys, Json v) {
    Json* node = &table;
    for (std::size_t k = 0; k + 1 < keys.size(); ++k) {
      Json& child = (*node)[keys[k]];
      if (child.is_null()) child = Json::object();
      if (!child.is_object()) fail("key '" + keys[k] + "' is not a table");
      node = &child;
    }
    if (node->contains(keys.back())) fail("duplicate key '" + keys.back() + "'");
    (*node)[keys.back()] = std::move(v);
  }

  std::string string_value() {
    const char quote = next();
    std::string out;
    for (;;) {
      if (eof() || peek() == '\n') fail("unterminated string");
      char c = next();
      if (c == quote) return out;
      if (c == '\\' && quote == '"') {
        if (eof()) fail("unterminated string");
        char e = next();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'u': {
            if (i_ + 4 > s_.size()) fail("bad \\u escape");
            unsigned long cp = std::stoul(s_.substr(i_, 4), nullptr, 16);
            i_ += 4;
            if (cp < 0x80) {
              out += static_cast<char>(cp);
            } else if (cp < 0x800) {
              out += static_cast<char>(0xC0 | (cp >> 6));
              out += static_cast<char>(0x80 | (cp & 0x3F));
            } else {
              out += static_cast<char>(0xE0 | (cp >> 12));
              out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
              out += static_cast<char>(0x80 | (cp & 0x3F));
            }
            break;
          }
          default: fail(std::string("unknown escape \\") + e);
        }
        continue;
      }
      out += c;
    }
  }

  Json value() {
    const char c = peek();
    if (c == '"' || c == '\'') return string_value();
    if (c == '[') return array_value();
    if (c == '{') return inline_table();
    if (s_.compare(i_, 4, "true") == 0) {
      i_ += 4;
      return true;
    }
    if (s_.compare(i_, 5, "false") == 0) {
      i_ += 5;
      return false;
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer();
    fail("expected a value");
  }

  Json integer() {
    std::string digits;
    if (peek() == '+' || peek() == '-') digits += next();
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) {
      char c = next();
      if (c != '_') digits += c;
    }
    if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("floating-point values are not accepted");
    if (digits.empty() || digits == "+" || digits == "-") fail("malformed integer");
    try {
      return std::stoll(digits);
    } catch (const std::exception&) {
      fail("integer out of range");
    }
  }

  Json array_value() {
    next();
    Json arr = Json::array();
    for (;;) {
      skip_blank();
      if (peek() == ']') {
        next();
        return arr;
      }
      arr.push_back(value());
      skip_blank();
      if (peek() == ',') {
        next();
        continue;
      }
      if (peek() != ']') fail("expected ',' or ']'");
    }
  }

  Json inline_table() {
    next();
    Json t = Json::object();
    skip_ws();
    if (peek() == '}') {
      next();
      return t;
    }
    for (;;) {
      skip_ws();
      auto keys = key_path();
      skip_ws();
      expect('=');
      skip_ws();
      assign(t, keys, value());
      skip_ws();
      if (peek() == ',') {
        next();
        continue;
      }
      expect('}');
      return t;
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::set<std::string> tables_;
};

std::string as_name(const Json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(what + " must be a string");
}

std::size_t as_count(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer");
  return static_cast<std::size_t>(v.get<long long>());
}

void only_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw ParseError("unknown key '" + k + "' in " + where);
  }
}

Matrix parse_matrix(const Json& rows, const Field& f, std::size_t nr, std::size_t nc, const std::string& arrow) {
  if (!rows.is_array()) throw ParseError("matrix for '" + arrow + "' must be an array of rows");
  if (rows.size() != nr)
    throw ParseError("matrix for '" + arrow + "' needs " + std::to_string(nr) + " rows, got " +
                     std::to_string(rows.size()));
  Matrix m(f, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    const Json& row = rows[r];
    if (!row.is_array() || row.size() != nc)
      throw ParseError("row " + std::to_string(r) + " of '" + arrow + "' needs " + std::to_string(nc) + " entries");
    for (std::size_t c = 0; c < nc; ++c) {
      const Json& e = row[c];
      std::string text;
      if (e.is_string()) {
        text = e.get<std::string>();
      } else if (e.is_number_integer()) {
        text = std::to_string(e.get<long long>());
      } else {
        throw ParseError("matrix entries must be exact strings or integers");
      }
      m.set_raw(r, c, parse_scalar(f, text));
    }
  }
  return m;
}

Module parse_summand(const Json& obj, const AlgebraPtr& alg, const std::string& fallback) {
  if (!obj.is_object()) throw ParseError("module entry must be a table");
  only_keys(obj, {"name", "standard", "dims", "maps"}, "module");
  std::string name = obj.contains("name") ? as_name(obj["name"], "name") : fallback;
  if (obj.contains("standard")) {
    if (obj.contains("dims") || obj.contains("maps")) throw ParseError("'standard' excludes 'dims' and 'maps'");
    std::string std_name = as_name(obj["standard"], "standard");
    if (std_name.size() < 2) throw ParseError("standard module '" + std_name + "' not understood");
    auto v = alg->quiver().vertex_index(std_name.substr(1));
    if (!v) throw ParseError("standard module '" + std_name + "': unknown vertex");
    Module m;
    switch (std_name[0]) {
      case 'P': m = projective(alg, *v); break;
      case 'I': m = injective(alg, *v); break;
      case 'S': m = simple(alg, *v); break;
      default: throw ParseError("standard module '" + std_name + "' must start with P, I or S");
    }
    return obj.contains("name") ? m.named(name) : m;
  }
  if (!obj.contains("dims")) throw ParseError("module '" + name + "' needs 'dims' or 'standard'");
  const Json& dj = obj["dims"];
  if (!dj.is_array() || dj.size() != alg->num_vertices())
    throw ParseError("'dims' needs one entry per vertex (" + std::to_string(alg->num_vertices()) + ")");
  std::vector<std::size_t> dims;
  for (const auto& d : dj) dims.push_back(as_count(d, "dimension"));
  const Json maps = obj.contains("maps") ? obj["maps"] : Json::object();
  if (!maps.is_object()) throw ParseError("'maps' must be a table");
  for (const auto& [k, v] : maps.items())
    if (!alg->quiver().arrow_index(k)) throw ParseError("unknown arrow '" + k + "' in maps");
  std::vector<Matrix> mats;
  for (const auto& ar : alg->arrows()) {
    const std::size_t nr = dims[ar.target], nc = dims[ar.source];
    mats.push_back(maps.contains(ar.name) ? parse_matrix(maps[ar.name], alg->field(), nr, nc, ar.name)
                                          : Matrix(alg->field(), nr, nc));
  }
  return Module(alg, dims, mats, name);
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

}  // namespace

Json parse_toml(const std::string& text) { return TomlParser(text).run(); }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraFile parse_algebra(const std::string& text) {
  Json root = parse_toml(text);
  only_keys(root, {"field", "quiver", "relations", "options"}, "algebra file");
  Field field = Field::rational();
  if (root.contains("field")) field = Field::parse(as_name(root["field"], "field"));
  if (!root.contains("quiver") || !root["quiver"].is_object()) throw ParseError("missing [quiver] table");
  const Json& qj = root["quiver"];
  only_keys(qj, {"vertices", "arrows"}, "[quiver]");
  Quiver q;
  if (!qj.contains("vertices") || !qj["vertices"].is_array()) throw ParseError("quiver.vertices must be an array");
  for (const auto& v : qj["vertices"]) q.vertices.push_back(as_name(v, "vertex"));
  if (qj.contains("arrows")) {
    if (!qj["arrows"].is_array()) throw ParseError("quiver.arrows must be an array");
    for (const auto& a : qj["arrows"]) {
      if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to"))
        throw ParseError("each arrow needs name, from and to");
      only_keys(a, {"name", "from", "to"}, "arrow");
      std::string name = as_name(a["name"], "arrow name");
      auto s = q.vertex_index(as_name(a["from"], "from"));
      auto t = q.vertex_index(as_name(a["to"], "to"));
      if (!s || !t) throw ParseError("arrow '" + name + "' refers to an unknown vertex");
      q.arrows.push_back({name, *s, *t});
    }
  }
  try {
    q.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  AlgebraFile out;
  if (root.contains("options")) {
    const Json& o = root["options"];
    if (!o.is_object()) throw ParseError("[options] must be a table");
    only_keys(o, {"max_path_length", "cutoff", "seed"}, "[options]");
    if (o.contains("max_path_length")) out.max_path_length = as_count(o["max_path_length"], "max_path_length");
    if (o.contains("cutoff")) out.cutoff = as_count(o["cutoff"], "cutoff");
    if (o.contains("seed")) out.seed = as_count(o["seed"], "seed");
  }
  std::vector<Relation> rels;
  if (root.contains("relations")) {
    if (!root["relations"].is_array()) throw ParseError("relations must be an array of strings");
    for (const auto& r : root["relations"]) {
      if (!r.is_string()) throw ParseError("relations must be strings");
      rels.push_back(parse_relation(field, q, r.get<std::string>()));
    }
  }
  out.algebra = build_algebra(field, q, rels, out.max_path_length.value_or(kDefaultMaxPathLength));
  return out;
}

AlgebraFile read_algebra_file(const std::string& path) { return parse_algebra(read_text(path)); }

ModuleFile parse_module(const std::string& text, const AlgebraPtr& alg) {
  Json root = parse_toml(text);
  ModuleFile out;
  if (root.contains("name")) out.name = as_name(root["name"], "name");
  if (root.contains("complete")) {
    if (!root["complete"].is_boolean()) throw ParseError("'complete' must be a boolean");
    out.complete = root["complete"].get<bool>();
  }
  if (root.contains("module")) {
    only_keys(root, {"name", "complete", "module"}, "module file");
    if (!root["module"].is_array()) throw ParseError("'module' must be an array of tables");
    std::size_t k = 0;
    for (const auto& m : root["module"]) out.summands.push_back(parse_summand(m, alg, "M" + std::to_string(++k)));
    if (out.summands.empty()) throw ParseError("no modules given");
  } else {
    Json single = root;
    single.erase("complete");
    out.summands.push_back(parse_summand(single, alg, out.name.empty() ? "M" : out.name));
  }
  if (out.name.empty()) {
    for (const auto& m : out.summands) out.name += (out.name.empty() ? "" : "+") + m.name();
  }
  return out;
}

ModuleFile read_module_file(const std::string& path, const AlgebraPtr& alg) {
  return parse_module(read_text(path), alg);
}

std::string write_module_file(const std::vector<Module>& summands, std::optional<bool> complete) {
  std::ostringstream out;
  if (complete) out << "complete = " << (*complete ? "true" : "false") << "\n";
  for (const auto& m : summands) {
    const auto& alg = *m.algebra();
    out << "\n[[module]]\nname = " << quoted(m.name()) << "\ndims = [";
    for (std::size_t v = 0; v < m.dims().size(); ++v) out << (v ? ", " : "") << m.dim(v);
    out << "]\n[module.maps]\n";
    for (std::size_t a = 0; a < alg.arrows().size(); ++a) {
      const Matrix& x = m.map(a);
      out << quoted(alg.arrows()[a].name) << " = [";
      for (std::size_t r = 0; r < x.rows(); ++r) {
        out << (r ? ", " : "") << "[";
        for (std::size_t c = 0; c < x.cols(); ++c) out << (c ? ", " : "") << quoted(to_string(x.at(r, c)));
        out << "]";
      }
      out << "]\n";
    }
  }
  return out.str();
}

Json to_json(const ValueWithStatus& v) {
  Json j = Json::object();
  if (v.is_infinite()) {
    j["value"] = nullptr;
  } else {
    j["value"] = v.value;
  }
  switch (v.status) {
    case Status::exact: j["status"] = "exact"; break;
    case Status::at_least: j["status"] = "at_least"; break;
    case Status::infinite: j["status"] = "infinite"; break;
  }
  return j;
}

Json to_json(const HomologicalDims& d) {
  Json j = Json::object();
  j["gldim"] = to_json(d.gldim);
  j["domdim"] = to_json(d.domdim);
  j["idim_left"] = to_json(d.idim_left);
  j["idim_right"] = to_json(d.idim_right);
  j["selfinjective"] = d.selfinjective;
  j["nakayama"] = d.nakayama;
  return j;
}

Json to_json(const RigidityReport& r) {
  auto opt = [](const std::optional<ValueWithStatus>& v) { return v ? to_json(*v) : Json(nullptr); };
  Json j = Json::object();
  j["cf"] = to_json(r.cf);
  if (r.completeness == RigidityReport::Completeness::lower_bound_only) {
    j["cf"]["upper"] = r.upper ? Json(*r.upper) : Json(nullptr);
  }
  j["witness"] = r.witness;
  j["ext_bound"] = opt(r.ext_bound);
  j["idim_bound"] = opt(r.idim_bound);
  j["candidates_examined"] = r.candidates_examined;
  j["completeness"] = r.completeness == RigidityReport::Completeness::exact ? "exact" : "lower_bound_only";
  j["rep_n_finite_up_to"] = r.rep_n_finite_up_to ? Json(*r.rep_n_finite_up_to) : Json(nullptr);
  j["search"] = r.search;
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json cj = Json::object();
    cj["summands"] = c.names;
    cj["evd"] = to_json(c.evd);
    cj["gldim"] = opt(c.gldim);
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  return j;
}

Json to_json(const MuellerResult& m) {
  Json j = Json::object();
  j["evd_plus_2"] = to_json(m.evd_plus_2);
  j["domdim_direct"] = to_json(m.domdim_direct);
  j["agree"] = m.agree;
  return j;
}

}  // namespace rigdim
