#include "epw/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace epw {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(fraction_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar scalar_from(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw PreconditionError("expected an exact rational string");
}

QMatrix matrix_from(const Json& j, std::size_t cols_if_empty) {
  if (!j.is_array()) throw PreconditionError("expected an array of rows");
  std::vector<QVector> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw PreconditionError("expected an array of rows");
    QVector row;
    for (const auto& x : r) row.push_back(scalar_from(x));
    rows.push_back(std::move(row));
  }
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw PreconditionError("ragged matrix");
  return QMatrix::from_rows(rows, cols);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(std::string("malformed JSON: ") + e.what());
  }
}

long small_int(const BigInt& x) {
  if (!x.fits_slong_p()) throw PreconditionError("integer does not fit in 64 bits");
  return x.get_si();
}

}  // namespace

std::string fraction_string(const Scalar& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string matrix_to_json(const QMatrix& m) { return matrix_json(m).dump(); }

QMatrix matrix_from_json(const std::string& text) { return matrix_from(parse(text), 0); }

std::string subspace_to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["basis"] = matrix_json(s.basis());
  return j.dump();
}

Subspace subspace_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.contains("ambient_dim") || !j.contains("basis")) throw PreconditionError("subspace JSON needs ambient_dim and basis");
  const auto n = j["ambient_dim"].get<std::size_t>();
  const QMatrix basis = matrix_from(j["basis"], n);
  if (basis.cols() != n) throw PreconditionError("subspace JSON: basis width differs from ambient_dim");
  return Subspace::span(n, basis);
}

std::string trivector_to_json(const TriVector& t) {
  Json a = Json::array();
  for (const auto& c : t.coords) a.push_back(fraction_string(c));
  return a.dump();
}

TriVector trivector_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.is_array() || j.size() != kWedge3) throw PreconditionError("trivector JSON must have 20 entries");
  TriVector t;
  for (std::size_t i = 0; i < kWedge3; ++i) t.coords[i] = scalar_from(j[i]);
  return t;
}

std::string stratum_sample_to_json(const StratumSample& s, int indent) {
  Json j;
  j["seed"] = s.seed;
  j["lagrangian_id"] = s.lagrangian_id;
  j["samples"] = s.samples;
  j["max_corank"] = s.max_corank();
  Json hist = Json::object();
  for (const auto& [c, n] : s.histogram) hist[std::to_string(c)] = n;
  j["corank_histogram"] = std::move(hist);
  Json pts = Json::array();
  for (const auto& p : s.points) {
    Json pj;
    pj["u"] = matrix_json(p.u);
    pj["corank"] = p.corank;
    pj["special"] = p.special;
    pts.push_back(std::move(pj));
  }
  j["special_points"] = std::move(pts);
  return j.dump(indent);
}

std::string lattice_to_json(const IntegralLattice& l) {
  Json j;
  j["rank"] = l.rank();
  Json g = Json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < l.rank(); ++k) row.push_back(small_int(l.gram()(i, k)));
    g.push_back(std::move(row));
  }
  j["gram"] = std::move(g);
  j["labels"] = l.labels();
  return j.dump();
}

IntegralLattice lattice_from_json(const std::string& text) {
  const Json j = parse(text);
  if (!j.contains("gram")) throw PreconditionError("lattice JSON needs gram");
  std::vector<std::vector<long>> rows;
  for (const auto& r : j["gram"]) rows.push_back(r.get<std::vector<long>>());
  IntMatrix gram = IntMatrix::from_rows(rows);
  if (gram.rows() != gram.cols()) throw PreconditionError("lattice JSON: gram must be square");
  if (j.contains("rank") && j["rank"].get<std::size_t>() != gram.rows()) throw PreconditionError("lattice JSON: rank mismatch");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return IntegralLattice(std::move(gram), std::move(labels));
}

std::string heegner_table_csv(const std::vector<HeegnerEntry>& rows) {
  std::ostringstream os;
  os << "e,nonempty,div,square,class,witness\n";
  for (const auto& r : rows) {
    os << r.e << "," << (r.nonempty ? "true" : "false") << ",";
    if (r.nonempty) {
      os << *r.div << "," << *r.square << ",\"(" << r.disc_class->first << "," << r.disc_class->second << ")\","
         << r.witness_text;
    } else {
      os << ",,,";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace epw
