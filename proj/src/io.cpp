#include "linecollab/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace linecollab::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ModelError(ModelErrorKind::Malformed, what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) malformed(where + " is not a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(where + " lacks field '" + key + "'");
  return *it;
}

Rational rational_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else {
    malformed(where + "." + key + " must be a rational string");
  }
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    malformed(where + "." + key + ": " + e.what());
  }
}

std::string id_field(const json& obj, const std::string& where) {
  const json& v = field(obj, "id", where);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  malformed(where + ".id must be a string");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Instance read_instance(std::string_view text) {
  const json doc = parse_json(text);
  const Rational v = rational_field(doc, "v", "instance");
  const json& arr = field(doc, "clients", "instance");
  if (!arr.is_array()) malformed("instance.clients must be an array");
  std::vector<Client> clients;
  clients.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "clients[" + std::to_string(k) + "]";
    const json& c = arr[k];
    Client a;
    a.id = id_field(c, where);
    a.s = rational_field(c, "s", where);
    a.r = rational_field(c, "r", where);
    const json& d = field(c, "d", where);
    if (d.is_string() && d.get<std::string>() == "inf") {
      a.d = std::nullopt;
    } else {
      a.d = rational_field(c, "d", where);
    }
    a.tau = rational_field(c, "tau", where);
    clients.push_back(std::move(a));
  }
  return Instance(v, std::move(clients));
}

std::string write_instance(const Instance& instance) {
  json doc;
  doc["v"] = instance.v().str();
  json arr = json::array();
  for (const auto& c : instance.clients()) {
    json o;
    o["id"] = c.id;
    o["s"] = c.s.str();
    o["r"] = c.r.str();
    o["d"] = c.d ? c.d->str() : std::string("inf");
    o["tau"] = c.tau.str();
    arr.push_back(std::move(o));
  }
  doc["clients"] = std::move(arr);
  return doc.dump(2) + "\n";
}

Solution read_solution(std::string_view text, const Instance& instance) {
  const json doc = parse_json(text);
  Solution sol;
  const json& seq = field(doc, "sequence", "solution");
  if (!seq.is_array()) malformed("solution.sequence must be an array");
  for (const auto& id : seq) {
    if (id.is_string()) {
      sol.sequence.push_back(id.get<std::string>());
    } else if (id.is_number_integer()) {
      sol.sequence.push_back(id.dump());
    } else {
      malformed("solution.sequence entries must be client ids");
    }
  }
  const json& rvs = field(doc, "rendezvous", "solution");
  if (!rvs.is_array()) malformed("solution.rendezvous must be an array");
  if (rvs.size() != sol.sequence.size()) {
    throw ModelError(ModelErrorKind::Structure, "solution has " + std::to_string(sol.sequence.size()) +
                                                    " sequence entries but " + std::to_string(rvs.size()) +
                                                    " rendezvous");
  }
  for (std::size_t k = 0; k < rvs.size(); ++k) {
    const std::string where = "rendezvous[" + std::to_string(k) + "]";
    const std::string id = id_field(rvs[k], where);
    if (id != sol.sequence[k]) {
      throw ModelError(ModelErrorKind::Structure,
                       where + " is for '" + id + "' but sequence position holds '" + sol.sequence[k] + "'");
    }
    const Client& c = instance.client(id);
    sol.rendezvous.push_back(make_rendezvous(c, rational_field(rvs[k], "t", where),
                                             rational_field(rvs[k], "x", where)));
  }
  sol.return_time = rational_field(doc, "return_time", "solution");
  return sol;
}

std::string write_solution(const Solution& solution) {
  json doc;
  doc["sequence"] = solution.sequence;
  json arr = json::array();
  for (const auto& rv : solution.rendezvous) {
    json o;
    o["id"] = rv.client_id;
    o["t"] = rv.t.str();
    o["x"] = rv.x.str();
    arr.push_back(std::move(o));
  }
  doc["rendezvous"] = std::move(arr);
  doc["return_time"] = solution.return_time.str();
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace linecollab::io
