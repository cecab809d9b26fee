#include "treegroups/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treegroups {

using nlohmann::json;

namespace {

// Reals are written as hi doubles under the field name and the residuals
// under "<field>_lo"; readers without the _lo fields get the hi values.
template <std::size_t N>
void put_reals(json& obj, const std::string& key, const std::array<Real, N>& v) {
  json hi = json::array(), lo = json::array();
  for (const auto& x : v) {
    const double h = to_double(x);
    hi.push_back(h);
    lo.push_back(to_double(x - Real(h)));
  }
  obj[key] = hi;
  obj[key + "_lo"] = lo;
}

template <std::size_t N>
std::array<Real, N> get_reals(const json& obj, const std::string& key) {
  const auto& hi = obj.at(key);
  if (!hi.is_array() || hi.size() != N)
    throw std::invalid_argument("rep json: " + key + " must have " + std::to_string(N) + " numbers");
  std::array<Real, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = Real(hi[i].get<double>());
  if (obj.contains(key + "_lo")) {
    const auto& lo = obj[key + "_lo"];
    if (!lo.is_array() || lo.size() != N) throw std::invalid_argument("rep json: " + key + "_lo has the wrong length");
    for (std::size_t i = 0; i < N; ++i) out[i] += Real(lo[i].get<double>());
  }
  return out;
}

std::array<Real, 4> circle_array(const Circle& c) { return {c.A(), c.B().real(), c.B().imag(), c.D()}; }

Circle circle_from(const std::array<Real, 4>& v) { return Circle::from_normalized(v[0], {v[1], v[2]}, v[3]); }

bool present(const json& obj, const std::string& key) { return obj.contains(key) && !obj[key].is_null(); }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json rep_to_json(const RepTable& rep) {
  json j;
  j["depth"] = rep.depth;
  j["tolerances"] = {{"identity_tol", rep.tolerances.identity_tol}, {"margin_floor", rep.tolerances.margin_floor}};
  j["levels"] = json::array();
  for (const auto& lv : rep.levels) j["levels"].push_back({{"k", lv.k}, {"L", lv.L}});
  j["vertices"] = json::array();
  for (const auto& [addr, v] : rep.vertices) {
    json jv;
    jv["addr"] = addr.path();
    if (v.matrix)
      put_reals(jv, "matrix", to_array(*v.matrix));
    else
      jv["matrix"] = nullptr;
    jv["plane_circle"] = nullptr;
    if (v.plane_circle) put_reals(jv, "plane_circle", circle_array(*v.plane_circle));
    jv["delta_disk"] = nullptr;
    if (v.delta_disk) {
      json d;
      put_reals(d, "circle", circle_array(v.delta_disk->circle));
      d["side"] = v.delta_disk->side;
      jv["delta_disk"] = d;
    }
    jv["combination_circle"] = nullptr;
    if (v.combination_circle) put_reals(jv, "combination_circle", circle_array(*v.combination_circle));
    jv["frame"] = nullptr;
    if (v.frame) put_reals(jv, "frame", to_array(*v.frame));
    j["vertices"].push_back(jv);
  }
  return j;
}

RepTable rep_from_json(const json& j) {
  try {
    RepTable rep;
    rep.depth = j.at("depth").get<int>();
    if (rep.depth < 1) throw std::invalid_argument("rep json: depth must be >= 1");
    rep.tolerances.identity_tol = j.at("tolerances").at("identity_tol").get<double>();
    rep.tolerances.margin_floor = j.at("tolerances").at("margin_floor").get<double>();
    for (const auto& lv : j.at("levels")) rep.levels.push_back({lv.at("k").get<int>(), lv.at("L").get<double>()});
    for (const auto& jv : j.at("vertices")) {
      VertexData v;
      v.addr = VertexAddress::parse(jv.at("addr").get<std::string>());
      if (v.addr.depth() > rep.depth) throw std::invalid_argument("rep json: vertex deeper than the table");
      if (!jv.at("matrix").is_null()) v.matrix = moebius_from_array(get_reals<8>(jv, "matrix"));
      if (present(jv, "plane_circle")) v.plane_circle = circle_from(get_reals<4>(jv, "plane_circle"));
      if (present(jv, "delta_disk")) {
        const int side = jv["delta_disk"].at("side").get<int>();
        if (side != 1 && side != -1) throw std::invalid_argument("rep json: disk side must be +-1");
        v.delta_disk = Disk{circle_from(get_reals<4>(jv["delta_disk"], "circle")), side};
      }
      if (present(jv, "combination_circle")) v.combination_circle = circle_from(get_reals<4>(jv, "combination_circle"));
      if (present(jv, "frame")) v.frame = moebius_from_array(get_reals<8>(jv, "frame"));
      if (v.addr.is_root() == v.matrix.has_value())
        throw std::invalid_argument("rep json: exactly the non-root vertices carry matrices");
      const auto addr = v.addr;
      if (!rep.vertices.emplace(addr, std::move(v)).second)
        throw std::invalid_argument("rep json: duplicate vertex '" + addr.path() + "'");
    }
    if (rep.vertices.size() != (std::size_t{1} << (rep.depth + 1)) - 1)
      throw std::invalid_argument("rep json: wrong number of vertices for the depth");
    return rep;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("rep json: ") + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_rep(const std::filesystem::path& path, const RepTable& rep) { write_text(path, rep_to_json(rep).dump(2) + "\n"); }

RepTable read_rep(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return rep_from_json(j);
}

json report_to_json(const CheckReport& report) {
  json j;
  j["check"] = report.check;
  j["pass"] = report.pass;
  j["min_margin"] = finite_or_null(report.min_margin);
  j["failures"] = report.failures;
  json details = json::object();
  for (const auto& [k, v] : report.details) details[k] = finite_or_null(v);
  j["details"] = details;
  return j;
}

std::string render_ppm(const std::vector<SpherePoint<double>>& points, int width, int height, std::size_t* dropped) {
  if (width < 1 || height < 1) throw std::invalid_argument("render_ppm: image size must be positive");
  const std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  std::string img(header.size() + 3 * static_cast<std::size_t>(width) * static_cast<std::size_t>(height), '\0');
  std::copy(header.begin(), header.end(), img.begin());
  std::size_t skipped = 0;
  for (const auto& p : points) {
    if (p.infinite) {
      ++skipped;
      continue;
    }
    const double x = (p.z.real() + 2.0) / 4.0 * width;
    const double y = (2.0 - p.z.imag()) / 4.0 * height;
    if (!(x >= 0 && x < width && y >= 0 && y < height)) {
      ++skipped;
      continue;
    }
    const auto px = static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
    for (std::size_t c = 0; c < 3; ++c) img[header.size() + 3 * px + c] = static_cast<char>(255);
  }
  if (dropped) *dropped = skipped;
  return img;
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string points_csv(const std::vector<SpherePoint<double>>& points) {
  std::string out = "re,im\n";
  for (const auto& p : points) {
    if (p.infinite) continue;
    out += format_double(p.z.real());
    out += ',';
    out += format_double(p.z.imag());
    out += '\n';
  }
  return out;
}

}  // namespace treegroups
