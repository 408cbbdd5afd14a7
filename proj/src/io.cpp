#include "gammalab/io.hpp"

#include <fstream>
#include <limits>

namespace gammalab::io {

namespace {

// Location inside a document, for error messages such as "z2.json: table[1][0]: ...".
class Ctx {
 public:
  explicit Ctx(std::string source, std::string path = {})
      : source_(std::move(source)), path_(std::move(path)) {}

  Ctx at(const std::string& key) const { return Ctx(source_, path_.empty() ? key : path_ + "." + key); }
  Ctx at(std::size_t i) const { return Ctx(source_, path_ + "[" + std::to_string(i) + "]"); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source_ + ": " + (path_.empty() ? "" : path_ + ": ") + message);
  }

 private:
  std::string source_;
  std::string path_;
};

const Json& require(const Json& j, const std::string& key, const Ctx& ctx) {
  if (!j.is_object()) ctx.fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) ctx.fail("missing field '" + key + "'");
  return *it;
}

Integer as_integer(const Json& j, const Ctx& ctx) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      ctx.fail("'" + j.get<std::string>() + "' is not an integer");
    }
  }
  ctx.fail("expected an integer");
}

long long as_int(const Json& j, const Ctx& ctx, long long lo = std::numeric_limits<long long>::min(),
                 long long hi = std::numeric_limits<long long>::max()) {
  if (!j.is_number_integer()) ctx.fail("expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi)
    ctx.fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

const Json& as_array(const Json& j, const Ctx& ctx) {
  if (!j.is_array()) ctx.fail("expected an array");
  return j;
}

IntVector as_vector(const Json& j, Eigen::Index length, const Ctx& ctx) {
  as_array(j, ctx);
  if (length >= 0 && static_cast<Eigen::Index>(j.size()) != length)
    ctx.fail("expected " + std::to_string(length) + " entries, found " + std::to_string(j.size()));
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = as_integer(j[i], ctx.at(i));
  return v;
}

IntMatrix as_matrix(const Json& j, Eigen::Index rows, Eigen::Index cols, const Ctx& ctx) {
  as_array(j, ctx);
  if (rows >= 0 && static_cast<Eigen::Index>(j.size()) != rows)
    ctx.fail("expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  IntMatrix m(static_cast<Eigen::Index>(j.size()), std::max<Eigen::Index>(cols, 0));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (cols < 0 && i == 0) {
      cols = static_cast<Eigen::Index>(as_array(j[0], ctx.at(std::size_t{0})).size());
      m.resize(static_cast<Eigen::Index>(j.size()), cols);
    }
    m.row(static_cast<Eigen::Index>(i)) = as_vector(j[i], cols, ctx.at(i)).transpose();
  }
  return m;
}

// Coefficients indexed by element; trailing zeros may be left out.
GroupRingElement as_group_ring(const Json& j, int order, const Ctx& ctx) {
  const IntVector given = as_vector(j, -1, ctx);
  if (given.size() > order)
    ctx.fail("expected at most " + std::to_string(order) + " entries, found " + std::to_string(given.size()));
  IntVector c = IntVector::Zero(order);
  c.head(given.size()) = given;
  return GroupRingElement(c);
}

std::string source_name(const std::filesystem::path& path) { return path.string(); }

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

GroupData parse_group(const Json& j, const std::string& source) {
  Ctx ctx(source);
  GroupData out{j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "",
                FiniteGroup::from_table({{0}}), {}};
  const auto n = as_int(require(j, "order", ctx), ctx.at("order"), 1, 4096);
  const auto& t = as_array(require(j, "table", ctx), ctx.at("table"));
  if (static_cast<long long>(t.size()) != n)
    ctx.at("table").fail("expected " + std::to_string(n) + " rows, found " + std::to_string(t.size()));
  std::vector<std::vector<Element>> table;
  for (std::size_t a = 0; a < t.size(); ++a) {
    const auto& row = as_array(t[a], ctx.at("table").at(a));
    if (static_cast<long long>(row.size()) != n)
      ctx.at("table").at(a).fail("expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    std::vector<Element> r;
    for (std::size_t b = 0; b < row.size(); ++b)
      r.push_back(static_cast<Element>(as_int(row[b], ctx.at("table").at(a).at(b), 0, n - 1)));
    table.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = as_array(j["labels"], ctx.at("labels"));
    if (static_cast<long long>(l.size()) != n) ctx.at("labels").fail("expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_string()) ctx.at("labels").at(i).fail("expected a string");
      labels.push_back(l[i].get<std::string>());
    }
  }
  try {
    out.group = FiniteGroup::from_table(std::move(table), std::move(labels));
  } catch (const GroupValidationError& e) {
    ctx.at("table").fail(e.what());
  }
  if (j.contains("characters")) {
    const auto& chars = j["characters"];
    if (!chars.is_object()) ctx.at("characters").fail("expected an object of name -> values");
    for (const auto& [name, values] : chars.items()) {
      const auto c = ctx.at("characters").at(name);
      const auto& v = as_array(values, c);
      if (static_cast<long long>(v.size()) != n) c.fail("expected " + std::to_string(n) + " values");
      std::vector<int> signs;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto s = as_int(v[i], c.at(i), -1, 1);
        if (s == 0) c.at(i).fail("values must be +1 or -1");
        signs.push_back(static_cast<int>(s));
      }
      try {
        out.characters.emplace_back(out.group, std::move(signs), name);
      } catch (const std::invalid_argument& e) {
        c.fail(e.what());
      }
    }
  }
  return out;
}

GroupData load_group(const std::filesystem::path& path) {
  return parse_group(read_json(path), source_name(path));
}

Json group_to_json(const std::string& name, const FiniteGroup& g,
                   const std::vector<OrientationChar>& characters) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["order"] = g.order();
  j["labels"] = g.labels();
  j["table"] = g.table();
  Json chars = Json::object();
  for (const auto& c : characters)
    if (!c.is_trivial()) chars[c.name()] = c.values();
  j["characters"] = chars;
  return j;
}

OrientationChar find_character(const GroupData& g, const std::string& name) {
  for (const auto& c : g.characters)
    if (c.name() == name) return c;
  if (name == "trivial") return OrientationChar::trivial(g.group);
  std::string known = "trivial";
  for (const auto& c : g.characters) known += ", " + c.name();
  throw ParseError("unknown character '" + name + "' (known: " + known + ")");
}

namespace {

AbelianPresentation parse_presentation_at(const Json& j, const Ctx& ctx) {
  const auto n = as_int(require(j, "ngens", ctx), ctx.at("ngens"), 0, 1 << 20);
  IntMatrix rel(0, n);
  if (j.contains("relations")) rel = as_matrix(j["relations"], -1, n, ctx.at("relations"));
  if (rel.rows() == 0) rel.resize(0, n);
  return AbelianPresentation(n, std::move(rel));
}

}  // namespace

AbelianPresentation parse_presentation(const Json& j, const std::string& source) {
  return parse_presentation_at(j, Ctx(source));
}

AbelianPresentation load_presentation(const std::filesystem::path& path) {
  return parse_presentation(read_json(path), source_name(path));
}

Json presentation_to_json(const AbelianPresentation& a) {
  Json j;
  j["ngens"] = a.ngens();
  j["relations"] = matrix_to_json(a.relations());
  return j;
}

namespace {

ZPiModule parse_module_at(const Json& j, const GroupData& g, const OrientationChar& w, const Ctx& ctx) {
  if (!j.is_object()) ctx.fail("expected an object");
  try {
    if (j.contains("free_rank"))
      return ZPiModule::free(g.group, static_cast<int>(as_int(j["free_rank"], ctx.at("free_rank"), 0, 4096)));
    if (j.contains("norm_quotient")) {
      if (!j["norm_quotient"].is_boolean() || !j["norm_quotient"].get<bool>())
        ctx.at("norm_quotient").fail("expected true");
      return norm_quotient(g.group, w);
    }
    if (j.contains("character")) {
      if (!j["character"].is_string()) ctx.at("character").fail("expected a character name");
      return ZPiModule::from_character(g.group, find_character(g, j["character"].get<std::string>()));
    }
    if (j.contains("sum")) {
      const auto& parts = as_array(j["sum"], ctx.at("sum"));
      if (parts.empty()) ctx.at("sum").fail("expected at least one summand");
      ZPiModule m = parse_module_at(parts[0], g, w, ctx.at("sum").at(std::size_t{0}));
      for (std::size_t i = 1; i < parts.size(); ++i)
        m = direct_sum(m, parse_module_at(parts[i], g, w, ctx.at("sum").at(i)));
      return m;
    }
    auto a = parse_presentation_at(j, ctx);
    const auto n = a.ngens();
    std::map<Element, IntMatrix> action;
    if (j.contains("action")) {
      const auto& act = j["action"];
      if (!act.is_object()) ctx.at("action").fail("expected an object of element -> matrix");
      for (const auto& [key, value] : act.items()) {
        Element e = g.group.find_label(key);
        if (e < 0) {
          try {
            std::size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size()) e = -1;
          } catch (const std::exception&) {
            e = -1;
          }
        }
        if (e < 0 || e >= g.group.order()) ctx.at("action").fail("unknown element '" + key + "'");
        action[e] = as_matrix(value, n, n, ctx.at("action").at(key));
      }
    }
    return ZPiModule::from_generators(g.group, std::move(a), action);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    ctx.fail(e.what());
  }
}

}  // namespace

ZPiModule parse_module(const Json& j, const GroupData& g, const OrientationChar& w,
                       const std::string& source) {
  return parse_module_at(j, g, w, Ctx(source));
}

ZPiModule load_module(const std::filesystem::path& path, const GroupData& g, const OrientationChar& w) {
  return parse_module(read_json(path), g, w, source_name(path));
}

HermitianForm parse_form(const Json& j, const ZPiModule& pi2, const OrientationChar& w,
                         const std::string& source) {
  Ctx ctx(source);
  if (!j.is_object()) ctx.fail("expected an object");
  const auto& g = pi2.group();
  try {
    if (j.contains("diagonal")) {
      const auto& d = as_array(j["diagonal"], ctx.at("diagonal"));
      std::vector<int> entries;
      for (std::size_t i = 0; i < d.size(); ++i)
        entries.push_back(static_cast<int>(as_int(d[i], ctx.at("diagonal").at(i), -1000000, 1000000)));
      return HermitianForm::diagonal(g, w, entries);
    }
    if (j.contains("integral_matrix"))
      return form_from_integral(pi2, w, as_matrix(j["integral_matrix"], pi2.ngens(), pi2.ngens(), ctx.at("integral_matrix")));
    const auto k = as_int(require(j, "rank", ctx), ctx.at("rank"), 0, 4096);
    FormBasis basis = pi2.free_rank() >= 0 ? FormBasis::GroupRing : FormBasis::Integral;
    if (j.contains("basis")) {
      const auto& b = j["basis"];
      if (b == "group_ring")
        basis = FormBasis::GroupRing;
      else if (b == "integral")
        basis = FormBasis::Integral;
      else
        ctx.at("basis").fail("expected \"group_ring\" or \"integral\"");
    }
    const auto& m = as_array(require(j, "matrix", ctx), ctx.at("matrix"));
    if (static_cast<long long>(m.size()) != k) ctx.at("matrix").fail("expected " + std::to_string(k) + " rows");
    GroupRingRows rows;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto& row = as_array(m[i], ctx.at("matrix").at(i));
      if (static_cast<long long>(row.size()) != k) ctx.at("matrix").at(i).fail("expected " + std::to_string(k) + " entries");
      rows.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c)
        rows.back().push_back(as_group_ring(row[c], g.order(), ctx.at("matrix").at(i).at(c)));
    }
    return HermitianForm(g, w, std::move(rows), basis);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    ctx.fail(e.what());
  }
}

HermitianForm load_form(const std::filesystem::path& path, const ZPiModule& pi2, const OrientationChar& w) {
  return parse_form(read_json(path), pi2, w, source_name(path));
}

Json form_to_json(const HermitianForm& f) {
  Json j;
  j["rank"] = f.rank();
  j["basis"] = f.basis() == FormBasis::GroupRing ? "group_ring" : "integral";
  Json m = Json::array();
  for (const auto& row : f.matrix()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(vector_to_json(x.coeffs()));
    m.push_back(r);
  }
  j["matrix"] = m;
  return j;
}

Resolution parse_resolution(const Json& j, const FiniteGroup& g, const std::string& source) {
  Ctx ctx(source);
  const auto& bs = as_array(require(j, "boundaries", ctx), ctx.at("boundaries"));
  std::vector<long long> ranks;
  if (j.contains("ranks")) {
    const auto& r = as_array(j["ranks"], ctx.at("ranks"));
    if (r.size() != bs.size() + 1)
      ctx.at("ranks").fail("expected " + std::to_string(bs.size() + 1) + " ranks (one per module F_0..F_n)");
    for (std::size_t i = 0; i < r.size(); ++i) ranks.push_back(as_int(r[i], ctx.at("ranks").at(i), 0, 1 << 20));
  }
  std::vector<GroupRingMatrix> d;
  for (std::size_t n = 0; n < bs.size(); ++n) {
    const auto c = ctx.at("boundaries").at(n);
    const auto& rows = as_array(bs[n], c);
    long long cols = ranks.empty() ? (rows.empty() ? 0 : static_cast<long long>(as_array(rows[0], c.at(std::size_t{0})).size()))
                                   : ranks[n + 1];
    if (!ranks.empty() && static_cast<long long>(rows.size()) != ranks[n])
      c.fail("expected " + std::to_string(ranks[n]) + " rows, found " + std::to_string(rows.size()));
    std::vector<std::vector<GroupRingElement>> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& row = as_array(rows[i], c.at(i));
      if (static_cast<long long>(row.size()) != cols)
        c.at(i).fail("expected " + std::to_string(cols) + " entries, found " + std::to_string(row.size()));
      entries.emplace_back();
      for (std::size_t k = 0; k < row.size(); ++k) entries.back().push_back(as_group_ring(row[k], g.order(), c.at(i).at(k)));
    }
    d.push_back(GroupRingMatrix::from_dense(entries, cols, g.order()));
  }
  try {
    return Resolution::validated(g, std::move(d));
  } catch (const std::invalid_argument& e) {
    ctx.fail(e.what());
  }
}

Resolution load_resolution(const std::filesystem::path& path, const FiniteGroup& g) {
  return parse_resolution(read_json(path), g, source_name(path));
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return to_int64(x);
  return to_string(x);
}

Json vector_to_json(const IntVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(integer_to_json(v(i)));
  return a;
}

Json matrix_to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i).transpose()));
  return a;
}

Json invariants_to_json(const InvariantFactors& f) {
  Json j;
  j["text"] = f.to_string();
  j["free_rank"] = f.free_rank;
  Json t = Json::array();
  for (const auto& d : f.torsion) t.push_back(integer_to_json(d));
  j["torsion"] = t;
  return j;
}

}  // namespace gammalab::io
