#include "mtc/config.hpp"

#include "mtc/models/bernoulli.hpp"
#include "mtc/models/car.hpp"
#include "mtc/models/cat_map.hpp"
#include "mtc/models/free_shift.hpp"
#include "mtc/models/singleton.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mtc {

namespace {

using nlohmann::json;

Rational rat(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("config: rationals must be integers or \"a/b\" strings");
}

std::vector<Rational> rat_list(const json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rat(e));
  return out;
}

void register_observables(FreeShiftModel& m, const json& obs) {
  for (auto& [name, def] : obs.items())
    m.register_name(name, m.monomial(def.get<std::vector<long>>()));
}

void register_observables(CatMapModel& m, const json& obs) {
  for (auto& [name, def] : obs.items()) {
    auto v = def.get<std::vector<long>>();
    if (v.size() != 2) throw std::invalid_argument("config: Weyl labels have 2 entries");
    m.register_name(name, m.weyl({v[0], v[1]}));
  }
}

void register_observables(BernoulliModel& m, const json& obs) {
  for (auto& [name, def] : obs.items()) {
    BernoulliModel::Cylinder c;
    c.sites = def.at("sites").get<std::vector<long>>();
    c.table = rat_list(def.at("table"));
    m.register_name(name, m.cylinder(std::move(c)));
  }
}

void register_observables(SingletonFactorizationModel& m, const json& obs) {
  for (auto& [name, def] : obs.items()) m.register_name(name, m.poly(rat_list(def)));
}

void register_observables(CarModel& m, const json& obs) {
  for (auto& [name, def] : obs.items()) {
    bool creation = def.at("type").get<std::string>() == "a*";
    std::vector<std::pair<long, std::complex<double>>> vec;
    for (const auto& e : def.at("vec"))
      vec.push_back({e.at(0).get<long>(),
                     {e.at(1).get<double>(), e.size() > 2 ? e.at(2).get<double>() : 0.0}});
    m.register_name(name, m.field(creation, std::move(vec)));
  }
}

ModelPtr build(const json& j) {
  std::string kind = j.at("model").get<std::string>();
  json obs = j.value("observables", json::object());
  if (kind == "freeshift") {
    auto m = std::make_shared<FreeShiftModel>();
    register_observables(*m, obs);
    return m;
  }
  if (kind == "catmap") {
    CatMapModel::Mat t{{{1, 1}, {1, 2}}};
    if (j.contains("T")) {
      auto rows = j.at("T").get<std::vector<std::vector<long>>>();
      if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw std::invalid_argument("config: T must be a 2x2 integer matrix");
      t = {{{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}}};
    }
    auto m = std::make_shared<CatMapModel>(rat(j.value("theta", json("1/3"))), t);
    register_observables(*m, obs);
    return m;
  }
  if (kind == "bernoulli") {
    std::vector<Rational> probs =
        j.contains("probs") ? rat_list(j.at("probs"))
                            : std::vector<Rational>{Rational(1, 2), Rational(1, 2)};
    auto m = std::make_shared<BernoulliModel>(std::move(probs));
    register_observables(*m, obs);
    return m;
  }
  if (kind == "singleton") {
    std::vector<Rational> moments;
    if (j.contains("moments"))
      moments = rat_list(j.at("moments"));
    else {
      moments.assign(13, Rational(1, 2));  // fair {0,1} coin
      moments[0] = 1;
    }
    auto m = std::make_shared<SingletonFactorizationModel>(std::move(moments));
    register_observables(*m, obs);
    return m;
  }
  if (kind == "car") {
    auto m = std::make_shared<CarModel>(rat(j.value("rho", json("1/2"))));
    register_observables(*m, obs);
    return m;
  }
  throw std::invalid_argument("config: unknown model kind '" + kind + "'");
}

json default_config(const std::string& name) {
  if (name == "freeshift")
    return {{"model", "freeshift"},
            {"observables", {{"e0", {0}}, {"e1", {1}}, {"e2", {2}}, {"e0e1", {0, 1}}}}};
  if (name == "catmap")
    return {{"model", "catmap"},
            {"theta", "1/3"},
            {"T", {{1, 1}, {1, 2}}},
            {"observables",
             {{"W10", {1, 0}}, {"W01", {0, 1}}, {"W-10", {-1, 0}}, {"W0-1", {0, -1}}}}};
  if (name == "bernoulli")
    return {{"model", "bernoulli"},
            {"probs", {"1/2", "1/2"}},
            {"observables",
             {{"spin", {{"sites", {0}}, {"table", {"-1/2", "1/2"}}}},
              {"ind", {{"sites", {0}}, {"table", {0, 1}}}}}}};
  if (name == "singleton")
    return {{"model", "singleton"},
            {"observables", {{"X", {0, 1}}, {"X2", {0, 0, 1}}}}};
  if (name == "car")
    return {{"model", "car"},
            {"rho", "1/2"},
            {"observables",
             {{"a0", {{"type", "a"}, {"vec", {{0, 1.0}}}}},
              {"a0*", {{"type", "a*"}, {"vec", {{0, 1.0}}}}},
              {"a1", {{"type", "a"}, {"vec", {{1, 1.0}}}}}}}};
  throw std::invalid_argument("config: no built-in model named '" + name + "'");
}

}  // namespace

ModelPtr model_from_json_text(const std::string& text) { return build(json::parse(text)); }

ModelPtr model_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return model_from_json_text(ss.str());
}

ModelPtr model_from_name(const std::string& name) { return build(default_config(name)); }

ModelPtr load_model(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return model_from_file(path_or_name);
  return model_from_name(path_or_name);
}

}  // namespace mtc
