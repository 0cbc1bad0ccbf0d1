#include "gfpca/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gfpca {

namespace {

using nlohmann::json;

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

// Strips a trailing carriage return so CRLF files parse too.
std::string read_line(std::istream& in) {
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("csv: expected a number, got '" + s + "'");
  }
}

long parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("csv: expected an integer, got '" + s + "'");
  }
}

void expect_header(const std::string& got, const std::string& want,
                   const std::filesystem::path& path) {
  if (got != want)
    throw std::invalid_argument("csv: " + path.string() + " expected header '" +
                                want + "', got '" + got + "'");
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

Graph read_edge_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  expect_header(read_line(in), "src,dst,weight", path);
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw std::invalid_argument("csv: malformed edge row '" + line + "'");
    Edge e;
    e.src = static_cast<int>(parse_int(fields[0]));
    e.dst = static_cast<int>(parse_int(fields[1]));
    e.weight = parse_double(fields[2]);
    max_vertex = std::max({max_vertex, e.src, e.dst});
    edges.push_back(e);
  }
  if (edges.empty()) throw std::invalid_argument("csv: empty edge list in " + path.string());
  return make_graph(max_vertex + 1, std::move(edges), /*directed=*/false);
}

void write_edge_csv(const std::filesystem::path& path, const Graph& graph) {
  std::ofstream out = open_output(path);
  out << "src,dst,weight\n";
  for (const Edge& e : graph.edges)
    out << e.src << ',' << e.dst << ',' << format_double(e.weight) << '\n';
}

CoordinateTable read_coord_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  const std::string header = read_line(in);
  CoordinateTable table;
  if (header == "id,x,y") {
    table.metric = Metric::euclidean;
  } else if (header == "id,lat,lon") {
    table.metric = Metric::haversine;
  } else {
    throw std::invalid_argument("csv: " + path.string() +
                                " expected header 'id,x,y' or 'id,lat,lon'");
  }
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw std::invalid_argument("csv: malformed coordinate row '" + line + "'");
    const long id = parse_int(fields[0]);
    if (id != static_cast<long>(table.points.size()))
      throw std::invalid_argument("csv: coordinate ids must be 0..n-1 in order");
    table.points.push_back({parse_double(fields[1]), parse_double(fields[2])});
  }
  if (table.points.empty())
    throw std::invalid_argument("csv: empty coordinate list in " + path.string());
  return table;
}

void write_coord_csv(const std::filesystem::path& path,
                     const std::vector<std::array<double, 2>>& points,
                     Metric metric) {
  std::ofstream out = open_output(path);
  out << (metric == Metric::euclidean ? "id,x,y\n" : "id,lat,lon\n");
  for (std::size_t i = 0; i < points.size(); ++i)
    out << i << ',' << format_double(points[i][0]) << ','
        << format_double(points[i][1]) << '\n';
}

MultivariateGraphSignal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  const std::string header = read_line(in);
  if (header.empty())
    throw std::invalid_argument("csv: " + path.string() + " is empty");
  std::vector<std::string> labels = split_csv_line(header);
  std::set<std::string> unique(labels.begin(), labels.end());
  if (unique.size() != labels.size())
    throw std::invalid_argument("csv: duplicate dimension labels in " + path.string());
  const std::size_t p = labels.size();

  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != p)
      throw std::invalid_argument("csv: signal row with " +
                                  std::to_string(fields.size()) +
                                  " values, expected " + std::to_string(p));
    std::vector<double> row(p);
    for (std::size_t j = 0; j < p; ++j) row[j] = parse_double(fields[j]);
    rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw std::invalid_argument("csv: signal file " + path.string() + " has no rows");

  Eigen::MatrixXcd values(rows.size(), p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < p; ++j) values(i, j) = rows[i][j];
  return make_signal(std::move(values), std::move(labels));
}

void write_signal_csv(const std::filesystem::path& path,
                      const MultivariateGraphSignal& signal) {
  std::ofstream out = open_output(path);
  const int p = signal.dims();
  for (int j = 0; j < p; ++j) {
    out << (signal.labels.empty() ? "X" + std::to_string(j + 1)
                                  : signal.labels[j]);
    out << (j + 1 < p ? ',' : '\n');
  }
  for (int i = 0; i < signal.vertices(); ++i) {
    for (int j = 0; j < p; ++j) {
      out << format_double(signal.values(i, j).real());
      out << (j + 1 < p ? ',' : '\n');
    }
  }
}

void write_density_csv(const std::filesystem::path& path,
                       const SpectralDensity& density,
                       const ShiftOperator& so) {
  std::ofstream out = open_output(path);
  out << "freq_index,lambda,re,im\n";
  for (int l = 0; l < density.values.size(); ++l)
    out << l + 1 << ',' << format_double(so.eigenvalues[l]) << ','
        << format_double(density.values[l].real()) << ','
        << format_double(density.values[l].imag()) << '\n';
}

SpectralDensity read_density_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  expect_header(read_line(in), "freq_index,lambda,re,im", path);
  std::vector<std::complex<double>> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 4)
      throw std::invalid_argument("csv: malformed density row '" + line + "'");
    values.emplace_back(parse_double(fields[2]), parse_double(fields[3]));
  }
  SpectralDensity d;
  d.values = Eigen::Map<Eigen::VectorXcd>(values.data(),
                                          static_cast<Eigen::Index>(values.size()));
  return d;
}

void write_envelope_csv(const std::filesystem::path& path,
                        const Eigen::VectorXd& envelope,
                        const ShiftOperator& so) {
  std::ofstream out = open_output(path);
  out << "freq_index,lambda,envelope\n";
  for (int l = 0; l < envelope.size(); ++l)
    out << l + 1 << ',' << format_double(so.eigenvalues[l]) << ','
        << format_double(envelope[l]) << '\n';
}

Eigen::VectorXd read_envelope_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  expect_header(read_line(in), "freq_index,lambda,envelope", path);
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw std::invalid_argument("csv: malformed envelope row '" + line + "'");
    values.push_back(parse_double(fields[2]));
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(),
                                     static_cast<Eigen::Index>(values.size()));
}

void write_scree_csv(const std::filesystem::path& path,
                     const Eigen::VectorXd& fractions) {
  std::ofstream out = open_output(path);
  out << "pc,fraction,cumulative\n";
  double cum = 0.0;
  for (int i = 0; i < fractions.size(); ++i) {
    cum += fractions[i];
    out << i + 1 << ',' << format_double(fractions[i]) << ','
        << format_double(cum) << '\n';
  }
}

ScreeTable read_scree_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  expect_header(read_line(in), "pc,fraction,cumulative", path);
  std::vector<double> fractions;
  std::vector<double> cumulative;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw std::invalid_argument("csv: malformed scree row '" + line + "'");
    fractions.push_back(parse_double(fields[1]));
    cumulative.push_back(parse_double(fields[2]));
  }
  ScreeTable t;
  t.fractions = Eigen::Map<Eigen::VectorXd>(fractions.data(),
                                            static_cast<Eigen::Index>(fractions.size()));
  t.cumulative = Eigen::Map<Eigen::VectorXd>(cumulative.data(),
                                             static_cast<Eigen::Index>(cumulative.size()));
  return t;
}

void write_scaling_csv(const std::filesystem::path& path,
                       const Eigen::VectorXcd& scaling,
                       const std::vector<std::string>& labels) {
  std::ofstream out = open_output(path);
  out << "dim,label,re,im,modulus\n";
  for (int i = 0; i < scaling.size(); ++i) {
    const std::string label = labels.empty()
                                  ? "X" + std::to_string(i + 1)
                                  : labels[static_cast<std::size_t>(i)];
    out << i + 1 << ',' << label << ',' << format_double(scaling[i].real())
        << ',' << format_double(scaling[i].imag()) << ','
        << format_double(std::abs(scaling[i])) << '\n';
  }
}

Eigen::VectorXcd read_scaling_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  expect_header(read_line(in), "dim,label,re,im,modulus", path);
  std::vector<std::complex<double>> values;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 5)
      throw std::invalid_argument("csv: malformed scaling row '" + line + "'");
    values.emplace_back(parse_double(fields[2]), parse_double(fields[3]));
  }
  return Eigen::Map<Eigen::VectorXcd>(values.data(),
                                      static_cast<Eigen::Index>(values.size()));
}

void write_residual_norms_csv(const std::filesystem::path& path,
                              const Eigen::VectorXd& residual_norms,
                              const Eigen::VectorXd& signal_norms,
                              const std::vector<std::string>& labels) {
  std::ofstream out = open_output(path);
  out << "dim,label,residual_norm,signal_norm\n";
  for (int i = 0; i < residual_norms.size(); ++i) {
    const std::string label = labels.empty()
                                  ? "X" + std::to_string(i + 1)
                                  : labels[static_cast<std::size_t>(i)];
    out << i + 1 << ',' << label << ',' << format_double(residual_norms[i])
        << ',' << format_double(signal_norms[i]) << '\n';
  }
}

void write_components_csv(const std::filesystem::path& path,
                          const GLPCAModel& model) {
  std::ofstream out = open_output(path);
  const int q = static_cast<int>(model.components.cols());
  out << "vertex";
  for (int j = 1; j <= q; ++j) out << ",pc" << j;
  out << '\n';
  for (int i = 0; i < model.components.rows(); ++i) {
    out << i;
    for (int j = 0; j < q; ++j)
      out << ',' << format_double(model.components(i, j));
    out << '\n';
  }
}

Eigen::MatrixXd read_components_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  const auto header = split_csv_line(read_line(in));
  if (header.empty() || header[0] != "vertex")
    throw std::invalid_argument("csv: " + path.string() + " has no 'vertex' header");
  const std::size_t q = header.size() - 1;
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != q + 1)
      throw std::invalid_argument("csv: malformed component row '" + line + "'");
    std::vector<double> row(q);
    for (std::size_t j = 0; j < q; ++j) row[j] = parse_double(fields[j + 1]);
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(rows.size(), q);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < q; ++j) m(i, j) = rows[i][j];
  return m;
}

std::string shift_operator_hash(const ShiftOperator& so) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV offset basis
  const auto mix = [&h](const unsigned char* bytes, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ULL;  // FNV prime
    }
  };
  const std::uint64_t n = static_cast<std::uint64_t>(so.n());
  mix(reinterpret_cast<const unsigned char*>(&n), sizeof(n));
  for (int j = 0; j < so.matrix.cols(); ++j) {
    for (int i = 0; i < so.matrix.rows(); ++i) {
      const double v = so.matrix(i, j);
      unsigned char bytes[sizeof(double)];
      std::memcpy(bytes, &v, sizeof(double));
      mix(bytes, sizeof(double));
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json complex_matrix_to_json(const Eigen::MatrixXcd& m) {
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json rrow = json::array();
    json irow = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      rrow.push_back(m(i, j).real());
      irow.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

Eigen::MatrixXcd complex_matrix_from_json(const json& j) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const std::size_t rows = re.size();
  const std::size_t cols = rows == 0 ? 0 : re.at(0).size();
  Eigen::MatrixXcd m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = {
          re.at(i).at(k).get<double>(), im.at(i).at(k).get<double>()};
  return m;
}

}  // namespace

void save_model(const GFreqPCAModel& model, const std::filesystem::path& path) {
  const int n = model.frequencies();
  const int p = model.dims();
  json doc;
  doc["format"] = "gfpca-model";
  doc["version"] = 1;
  doc["n"] = n;
  doc["p"] = p;
  doc["q"] = model.q;
  doc["shift_operator_hash"] = shift_operator_hash(model.so);
  doc["labels"] = model.labels;
  json lambdas = json::array();
  for (int l = 0; l < n; ++l) lambdas.push_back(model.so.eigenvalues[l]);
  doc["lambda"] = std::move(lambdas);
  json tau = json::array();
  json basis = json::array();
  for (int l = 0; l < n; ++l) {
    json row = json::array();
    for (int i = 0; i < p; ++i) row.push_back(model.power[l][i]);
    tau.push_back(std::move(row));
    basis.push_back(complex_matrix_to_json(model.basis[l]));
  }
  doc["tau"] = std::move(tau);
  doc["basis"] = std::move(basis);
  doc["offsets"] = complex_matrix_to_json(model.offsets);

  std::ofstream out = open_output(path);
  out << doc.dump(1) << '\n';
}

GFreqPCAModel load_model(const std::filesystem::path& path,
                         const ShiftOperator& so) {
  std::ifstream in = open_input(path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::invalid_argument("model file: parse failure: " + std::string(e.what()));
  }
  try {
    if (doc.at("format").get<std::string>() != "gfpca-model")
      throw std::invalid_argument("model file: unexpected format tag");
    if (doc.at("shift_operator_hash").get<std::string>() !=
        shift_operator_hash(so))
      throw std::invalid_argument(
          "model file: shift operator hash mismatch; the model was fitted on "
          "a different graph");
    const int n = doc.at("n").get<int>();
    const int p = doc.at("p").get<int>();
    if (n != so.n())
      throw std::invalid_argument("model file: vertex count does not match operator");
    GFreqPCAModel model;
    model.so = so;
    model.q = doc.at("q").get<int>();
    model.labels = doc.at("labels").get<std::vector<std::string>>();
    model.power.assign(n, Eigen::VectorXd(p));
    model.basis.assign(n, Eigen::MatrixXcd(p, p));
    const auto& tau = doc.at("tau");
    const auto& basis = doc.at("basis");
    for (int l = 0; l < n; ++l) {
      for (int i = 0; i < p; ++i)
        model.power[l][i] = tau.at(l).at(i).get<double>();
      model.basis[l] = complex_matrix_from_json(basis.at(l));
      if (model.basis[l].rows() != p || model.basis[l].cols() != p)
        throw std::invalid_argument("model file: malformed basis block");
    }
    model.offsets = complex_matrix_from_json(doc.at("offsets"));
    if (model.offsets.rows() != n || model.offsets.cols() != p)
      throw std::invalid_argument("model file: malformed offsets block");
    if (model.q < 1 || model.q > p)
      throw std::invalid_argument("model file: rank out of range");
    return model;
  } catch (const json::exception& e) {
    throw std::invalid_argument("model file: missing or malformed field: " +
                                std::string(e.what()));
  }
}

}  // namespace gfpca
