#include "nlops/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace nlops {

namespace {

using nlohmann::json;

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    arr.push_back({v[k].real(), v[k].imag()});
  return arr;
}

Vector vector_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.empty())
    throw std::invalid_argument("state set JSON: " + where +
                                " must be a non-empty array");
  Vector v(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const json& amp = arr[k];
    if (!amp.is_array() || amp.size() != 2 || !amp[0].is_number() ||
        !amp[1].is_number())
      throw std::invalid_argument("state set JSON: " + where +
                                  " amplitudes must be [re, im] pairs");
    const double re = amp[0].get<double>();
    const double im = amp[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im))
      throw std::invalid_argument("state set JSON: non-finite amplitude in " +
                                  where);
    v[static_cast<Eigen::Index>(k)] = Complex(re, im);
  }
  return v;
}

}  // namespace

std::string save_json(const StateSet& s) {
  json j;
  j["m"] = s.m;
  j["n"] = s.n;
  if (s.family.empty())
    j["family"] = nullptr;
  else
    j["family"] = s.family;
  json states = json::array();
  for (const ProductState& st : s.states) {
    json e;
    e["label"] = st.label;
    e["a"] = vector_to_json(st.a);
    e["b"] = vector_to_json(st.b);
    states.push_back(std::move(e));
  }
  j["states"] = std::move(states);
  return j.dump(2);
}

StateSet load_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state set JSON: parse error: ") +
                                e.what());
  }
  if (!j.is_object() || !j.contains("m") || !j.contains("n") ||
      !j.contains("states"))
    throw std::invalid_argument(
        "state set JSON: object with m, n, states required");
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    throw std::invalid_argument("state set JSON: m and n must be integers");

  StateSet s;
  s.m = j["m"].get<int>();
  s.n = j["n"].get<int>();
  if (s.m < 1 || s.n < 1)
    throw std::invalid_argument("state set JSON: dimensions must be positive");
  if (j.contains("family") && !j["family"].is_null()) {
    if (!j["family"].is_string())
      throw std::invalid_argument("state set JSON: family must be a string");
    s.family = j["family"].get<std::string>();
  }
  if (!j["states"].is_array())
    throw std::invalid_argument("state set JSON: states must be an array");

  int k = 0;
  for (const json& e : j["states"]) {
    ++k;
    if (!e.is_object() || !e.contains("a") || !e.contains("b"))
      throw std::invalid_argument("state set JSON: state entries need a and b");
    ProductState st;
    st.label = e.contains("label") && e["label"].is_string()
                   ? e["label"].get<std::string>()
                   : "phi" + std::to_string(k);
    st.a = vector_from_json(e["a"], "state " + st.label + " a");
    st.b = vector_from_json(e["b"], "state " + st.label + " b");
    if (st.a.size() != s.m)
      throw std::invalid_argument("state set JSON: state " + st.label +
                                  " has a-dimension " +
                                  std::to_string(st.a.size()) +
                                  ", expected m=" + std::to_string(s.m));
    if (st.b.size() != s.n)
      throw std::invalid_argument("state set JSON: state " + st.label +
                                  " has b-dimension " +
                                  std::to_string(st.b.size()) +
                                  ", expected n=" + std::to_string(s.n));
    s.states.push_back(std::move(st));
  }
  return s;
}

StateSet load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_json(buf.str());
}

void save_json_file(const StateSet& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << save_json(s) << "\n";
}

}  // namespace nlops
