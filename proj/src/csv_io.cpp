#include "drp/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "drp/reserve_price.hpp"

namespace drp {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::filesystem::path& file, std::size_t line,
                    const std::string& field, const char* name) {
  double v = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    throw CsvError(file, line,
                   std::string("cannot parse ") + name + " value '" + field +
                       "'");
  }
  return v;
}

std::ifstream open_input(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw CsvError(file, 0, "cannot open file for reading");
  }
  return in;
}

std::ofstream open_output(const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) {
    throw CsvError(file, 0, "cannot open file for writing");
  }
  return out;
}

}  // namespace

CsvError::CsvError(const std::filesystem::path& file, std::size_t line,
                   const std::string& message)
    : std::runtime_error(file.string() + ":" + std::to_string(line) + ": " +
                         message),
      line_(line) {}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::vector<DomainTrafficRecord> read_domain_csv(
    const std::filesystem::path& file) {
  auto in = open_input(file);
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || strip_cr(line) != "id,bid,ctr,gpm") {
    throw CsvError(file, 1, "expected header 'id,bid,ctr,gpm'");
  }
  std::vector<DomainTrafficRecord> records;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw CsvError(file, lineno, "expected 4 fields, found " +
                                       std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw CsvError(file, lineno, "empty id");
    DomainTrafficRecord rec;
    rec.id = fields[0];
    rec.bid = parse_double(file, lineno, fields[1], "bid");
    rec.ctr = parse_double(file, lineno, fields[2], "ctr");
    rec.gpm = parse_double(file, lineno, fields[3], "gpm");
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw CsvError(file, lineno, "no data rows");
  return records;
}

GeneralProblem read_general_csv(const std::filesystem::path& file,
                                std::span<const double> bounds) {
  auto in = open_input(file);
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw CsvError(file, 1, "missing header");
  auto header = split_fields(strip_cr(line));
  if (header.size() < 3 || header[0] != "id" || header[1] != "c") {
    throw CsvError(file, 1, "expected header 'id,c,b1,...,bL'");
  }
  const std::size_t l = header.size() - 2;
  for (std::size_t k = 0; k < l; ++k) {
    if (header[2 + k] != "b" + std::to_string(k + 1)) {
      throw CsvError(file, 1, "expected header column 'b" +
                                  std::to_string(k + 1) + "', found '" +
                                  header[2 + k] + "'");
    }
  }

  std::vector<std::string> ids;
  std::vector<double> values;
  std::vector<double> coefs;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2 + l) {
      throw CsvError(file, lineno, "expected " + std::to_string(2 + l) +
                                       " fields, found " +
                                       std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw CsvError(file, lineno, "empty id");
    ids.push_back(fields[0]);
    values.push_back(parse_double(file, lineno, fields[1], "c"));
    for (std::size_t k = 0; k < l; ++k) {
      coefs.push_back(parse_double(file, lineno, fields[2 + k], "b"));
    }
  }
  if (ids.empty()) throw CsvError(file, lineno, "no data rows");

  std::vector<double> bound_vec(bounds.begin(), bounds.end());
  if (bound_vec.empty()) bound_vec.assign(l, 0.0);
  if (bound_vec.size() != l) {
    throw CsvError(file, 1, "got " + std::to_string(bound_vec.size()) +
                                " bounds for " + std::to_string(l) +
                                " constraint columns");
  }
  try {
    return GeneralProblem(std::move(values), std::move(coefs),
                          std::move(bound_vec), ProblemMode::kRawGeneral,
                          std::move(ids));
  } catch (const std::invalid_argument& e) {
    throw CsvError(file, lineno, e.what());
  }
}

void write_general_csv(const std::filesystem::path& file,
                       const GeneralProblem& problem) {
  auto out = open_output(file);
  const std::size_t l = problem.num_constraints();
  out << "id,c";
  for (std::size_t k = 0; k < l; ++k) out << ",b" << (k + 1);
  out << "\n";
  for (std::size_t i = 0; i < problem.num_records(); ++i) {
    out << problem.id(i) << ',' << format_double(problem.value(i));
    for (double b : problem.coefs(i)) out << ',' << format_double(b);
    out << "\n";
  }
  if (!out) throw CsvError(file, 0, "write failed");
}

void write_selection_csv(const std::filesystem::path& file,
                         const GeneralProblem& problem, const Selection& sel) {
  auto out = open_output(file);
  out << "id,selected\n";
  for (std::size_t i = 0; i < problem.num_records(); ++i) {
    out << problem.id(i) << ',' << unsigned(sel.selected[i]) << "\n";
  }
  if (!out) throw CsvError(file, 0, "write failed");
}

void write_reserve_csv(const std::filesystem::path& file,
                       const std::vector<DomainTrafficRecord>& records,
                       const PlatformConstraints& cons, const DualState& duals,
                       bool clamp_negative) {
  auto out = open_output(file);
  out << "id,r,x\n";
  for (const auto& rec : records) {
    const double r = reserve_price_value(rec.ctr, rec.gpm, cons, duals.lambdas);
    const bool sold = rec.bid > r;
    const double shown = clamp_negative && r < 0.0 ? 0.0 : r;
    out << rec.id << ',' << format_double(shown) << ',' << (sold ? 1 : 0)
        << "\n";
  }
  if (!out) throw CsvError(file, 0, "write failed");
}

}  // namespace drp
