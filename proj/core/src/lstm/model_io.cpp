#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tbc/error.hpp"
#include "tbc/lstm/model.hpp"

namespace tbc::lstm {

namespace {

using nlohmann::json;

constexpr const char* kFormat = "tbc-lstm";
constexpr int kFormatVersion = 1;

json tensor_json(const num::Tensor2& t) {
  return {{"rows", t.rows()}, {"cols", t.cols()}, {"data", std::vector<double>(t.data().begin(), t.data().end())}};
}

num::Tensor2 tensor_from(const json& j) {
  return num::Tensor2(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                      j.at("data").get<std::vector<double>>());
}

}  // namespace

std::string model_to_json(const TbcModel& model) {
  if (!model.trained()) throw Error("refusing to save an untrained model");
  const auto& p = model.params();
  const auto& c = model.config();

  json gates = json::object();
  for (std::size_t g = 0; g < kGateCount; ++g) {
    const auto& w = p.gates[g];
    gates[std::string(gate_name(static_cast<Gate>(g)))] = {
        {"input", tensor_json(w.input)}, {"recurrent", tensor_json(w.recurrent)}, {"bias", w.bias}};
  }

  json doc = {
      {"format", kFormat},
      {"version", kFormatVersion},
      {"input_size", kInputSize},
      {"hidden_size", p.hidden_size()},
      {"classes", model.classes().names()},
      {"config",
       {{"epochs", c.epochs},
        {"batch_size", c.batch_size},
        {"learning_rate", c.learning_rate},
        {"seed", c.seed},
        {"shuffle", c.shuffle},
        {"hidden_size", c.hidden_size},
        {"init_scale", c.init_scale},
        {"forget_bias", c.forget_bias},
        {"clip_norm", c.clip_norm}}},
      {"loss_history", model.loss_history()},
      {"params", {{"gates", gates}, {"head", tensor_json(p.head)}, {"head_bias", p.head_bias}, {"seed", p.seed}}},
  };
  return doc.dump(1);
}

TbcModel model_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != kFormat) throw Error("not a tbc-lstm model file");
    if (doc.at("version").get<int>() != kFormatVersion) throw Error("unsupported model file version");
    if (doc.at("input_size").get<std::size_t>() != kInputSize) throw Error("model input size must be 128");

    LstmParams p;
    const auto& jp = doc.at("params");
    for (std::size_t g = 0; g < kGateCount; ++g) {
      const auto& jg = jp.at("gates").at(std::string(gate_name(static_cast<Gate>(g))));
      p.gates[g].input = tensor_from(jg.at("input"));
      p.gates[g].recurrent = tensor_from(jg.at("recurrent"));
      p.gates[g].bias = jg.at("bias").get<std::vector<double>>();
    }
    p.head = tensor_from(jp.at("head"));
    p.head_bias = jp.at("head_bias").get<std::vector<double>>();
    p.seed = jp.at("seed").get<std::uint64_t>();
    p.validate();
    if (p.hidden_size() != doc.at("hidden_size").get<std::size_t>()) throw Error("hidden size mismatch");

    const auto& jc = doc.at("config");
    TrainConfig c;
    c.epochs = jc.at("epochs").get<std::size_t>();
    c.batch_size = jc.at("batch_size").get<std::size_t>();
    c.learning_rate = jc.at("learning_rate").get<double>();
    c.seed = jc.at("seed").get<std::uint64_t>();
    c.shuffle = jc.at("shuffle").get<bool>();
    c.hidden_size = jc.at("hidden_size").get<std::size_t>();
    c.init_scale = jc.at("init_scale").get<double>();
    c.forget_bias = jc.at("forget_bias").get<double>();
    c.clip_norm = jc.at("clip_norm").get<double>();

    const auto names = doc.at("classes").get<std::vector<std::string>>();
    data::ClassDictionary classes(names);
    if (classes.names() != names) throw Error("class list must be sorted and distinct");

    return TbcModel(std::move(p), std::move(classes), c, doc.at("loss_history").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw Error(std::string("malformed model file: ") + e.what());
  }
}

void save_model(const TbcModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write model file", path.string());
  out << model_to_json(model) << '\n';
}

TbcModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open model file", path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return model_from_json(buffer.str());
}

}  // namespace tbc::lstm
