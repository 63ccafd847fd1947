#include "braidmono/records.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"

namespace braidmono {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "jsonl") return Format::Jsonl;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected jsonl or csv)");
}

OutputRecord to_record(const MonodromyRep& rep) {
  OutputRecord r;
  r.degree = rep.degree;
  r.sigma = rep.sigma.to_one_line();
  r.a1 = rep.a1.to_one_line();
  r.a2 = rep.a2.to_one_line();
  r.b1 = rep.b1.to_one_line();
  r.b2 = rep.b2.to_one_line();
  return r;
}

OutputRecord to_record(const ConjugacyClassRecord& cls, const SurfaceReport& surface) {
  OutputRecord r = to_record(cls.representative);
  r.orbit_size = cls.orbit_size;
  r.stabilizer_order = cls.stabilizer_order;
  r.galois = surface.galois;
  r.transitive = surface.image_transitive;
  r.image_order = surface.image_order;
  r.chi = surface.chi;
  r.k_squared = surface.k_squared;
  return r;
}

MonodromyRep to_rep(const OutputRecord& record) {
  MonodromyRep rep;
  rep.degree = record.degree;
  rep.sigma = Perm::from_one_line(record.sigma);
  rep.a1 = Perm::from_one_line(record.a1);
  rep.a2 = Perm::from_one_line(record.a2);
  rep.b1 = Perm::from_one_line(record.b1);
  rep.b2 = Perm::from_one_line(record.b2);
  for (const Perm* p : {&rep.sigma, &rep.a1, &rep.a2, &rep.b1, &rep.b2})
    if (p->degree() != record.degree)
      throw std::invalid_argument("record degree " + std::to_string(record.degree) +
                                  " does not match permutation " + p->to_one_line());
  return rep;
}

namespace {

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted CSV field");
  fields.push_back(cur);
  return fields;
}

const std::vector<std::string>& solution_columns() {
  static const std::vector<std::string> cols = {"schema", "degree", "sigma", "a1",
                                                "a2",     "b1",     "b2"};
  return cols;
}

const std::vector<std::string>& class_columns() {
  static const std::vector<std::string> cols = {
      "schema",      "degree",           "sigma",  "a1",         "a2",
      "b1",          "b2",               "orbit_size", "stabilizer_order", "galois",
      "transitive",  "image_order",      "chi",    "k_squared"};
  return cols;
}

std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

OutputRecord record_from_json(const json& j, std::size_t line_no) {
  try {
    OutputRecord r;
    r.schema = j.at("schema").get<std::string>();
    r.degree = j.at("degree").get<int>();
    r.sigma = j.at("sigma").get<std::string>();
    r.a1 = j.at("a1").get<std::string>();
    r.a2 = j.at("a2").get<std::string>();
    r.b1 = j.at("b1").get<std::string>();
    r.b2 = j.at("b2").get<std::string>();
    if (j.contains("orbit_size")) {
      r.orbit_size = j.at("orbit_size").get<std::uint64_t>();
      r.stabilizer_order = j.at("stabilizer_order").get<std::uint64_t>();
      r.galois = j.at("galois").get<bool>();
      r.transitive = j.at("transitive").get<bool>();
      r.image_order = j.at("image_order").get<std::uint64_t>();
      r.chi = j.at("chi").get<int>();
      r.k_squared = j.at("k_squared").get<int>();
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(line_no, std::string("bad record object: ") + e.what());
  }
}

OutputRecord record_from_csv(const std::vector<std::string>& header,
                             const std::string& line, std::size_t line_no) {
  const std::vector<std::string> fields = csv_split(line, line_no);
  if (fields.size() != header.size())
    throw ParseError(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                                  std::to_string(fields.size()));
  OutputRecord r;
  auto parse_u64 = [&](const std::string& s) -> std::uint64_t {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad integer field '" + s + "'");
    }
  };
  auto parse_int = [&](const std::string& s) -> int {
    try {
      return std::stoi(s);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad integer field '" + s + "'");
    }
  };
  auto parse_bool = [&](const std::string& s) -> bool {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError(line_no, "bad boolean field '" + s + "'");
  };
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string& col = header[i];
    const std::string& val = fields[i];
    if (col == "schema") r.schema = val;
    else if (col == "degree") r.degree = parse_int(val);
    else if (col == "sigma") r.sigma = val;
    else if (col == "a1") r.a1 = val;
    else if (col == "a2") r.a2 = val;
    else if (col == "b1") r.b1 = val;
    else if (col == "b2") r.b2 = val;
    else if (col == "orbit_size") r.orbit_size = parse_u64(val);
    else if (col == "stabilizer_order") r.stabilizer_order = parse_u64(val);
    else if (col == "galois") r.galois = parse_bool(val);
    else if (col == "transitive") r.transitive = parse_bool(val);
    else if (col == "image_order") r.image_order = parse_u64(val);
    else if (col == "chi") r.chi = parse_int(val);
    else if (col == "k_squared") r.k_squared = parse_int(val);
    else throw ParseError(line_no, "unknown CSV column '" + col + "'");
  }
  if (r.sigma.empty()) throw ParseError(line_no, "record is missing the sigma column");
  return r;
}

}  // namespace

std::string csv_header(bool classified) {
  return join(classified ? class_columns() : solution_columns());
}

std::string serialize_record(const OutputRecord& record, Format format) {
  if (format == Format::Jsonl) {
    json j;
    j["schema"] = record.schema;
    j["degree"] = record.degree;
    j["sigma"] = record.sigma;
    j["a1"] = record.a1;
    j["a2"] = record.a2;
    j["b1"] = record.b1;
    j["b2"] = record.b2;
    if (record.classified()) {
      j["orbit_size"] = *record.orbit_size;
      j["stabilizer_order"] = *record.stabilizer_order;
      j["galois"] = *record.galois;
      j["transitive"] = *record.transitive;
      j["image_order"] = *record.image_order;
      j["chi"] = *record.chi;
      j["k_squared"] = *record.k_squared;
    }
    return j.dump();
  }
  std::vector<std::string> fields = {record.schema,           std::to_string(record.degree),
                                     csv_quote(record.sigma), csv_quote(record.a1),
                                     csv_quote(record.a2),    csv_quote(record.b1),
                                     csv_quote(record.b2)};
  if (record.classified()) {
    fields.push_back(std::to_string(*record.orbit_size));
    fields.push_back(std::to_string(*record.stabilizer_order));
    fields.push_back(*record.galois ? "true" : "false");
    fields.push_back(*record.transitive ? "true" : "false");
    fields.push_back(std::to_string(*record.image_order));
    fields.push_back(std::to_string(*record.chi));
    fields.push_back(std::to_string(*record.k_squared));
  }
  return join(fields);
}

std::vector<OutputRecord> read_records(std::istream& in) {
  std::vector<OutputRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool format_known = false;
  Format format = Format::Jsonl;
  std::vector<std::string> header;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    if (!format_known) {
      format = line.front() == '{' ? Format::Jsonl : Format::Csv;
      format_known = true;
      if (format == Format::Csv) {
        if (line.front() == '#') continue;  // summary before any data
        header = csv_split(line, line_no);
        for (const std::string& col : header)
          if (col != "schema" && col != "degree" && col != "sigma" && col != "a1" &&
              col != "a2" && col != "b1" && col != "b2" && col != "orbit_size" &&
              col != "stabilizer_order" && col != "galois" && col != "transitive" &&
              col != "image_order" && col != "chi" && col != "k_squared")
            throw ParseError(line_no, "not a record stream: unknown column '" + col + "'");
        continue;
      }
    }

    if (format == Format::Jsonl) {
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded()) throw ParseError(line_no, "malformed JSON");
      if (j.contains("summary")) continue;
      records.push_back(record_from_json(j, line_no));
    } else {
      if (line.front() == '#') continue;
      if (header.empty()) throw ParseError(line_no, "CSV data before header line");
      records.push_back(record_from_csv(header, line, line_no));
    }
  }
  return records;
}

}  // namespace braidmono
