#include "blasgen/llm_client.hpp"

#include <fmt/format.h>
#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using nlohmann::json;

namespace blasgen {

const ModelProfile& gpt41_profile() {
  static const ModelProfile p{"gpt-4.1", 1047576, 32768, 2.00, 8.00, false};
  return p;
}

const ModelProfile& o4mini_profile() {
  static const ModelProfile p{"o4-mini", 200000, 100000, 1.10, 4.40, true};
  return p;
}

std::optional<ModelProfile> find_profile(std::string_view model_id) {
  for (const ModelProfile* p : {&gpt41_profile(), &o4mini_profile()}) {
    if (p->model_id == model_id) return *p;
  }
  return std::nullopt;
}

double cost_usd(const ModelProfile& p, std::int64_t tokens_in, std::int64_t tokens_out) {
  return static_cast<double>(tokens_in) * p.price_in / 1e6 +
         static_cast<double>(tokens_out) * p.price_out / 1e6;
}

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::int64_t approx_tokens(std::size_t bytes) {
  return static_cast<std::int64_t>((bytes + 3) / 4);
}

}  // namespace

MockBackend::MockBackend(fs::path corpus_root) : root_(std::move(corpus_root)) {}

std::vector<fs::path> MockBackend::entries(Routine r) const {
  std::vector<fs::path> out;
  const fs::path dir = root_ / std::string(name_of(r));
  if (!fs::is_directory(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".c") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Completion MockBackend::complete(const PromptBundle& prompt, const ModelProfile&,
                                 const SamplingConfig&, int sample_index) {
  const auto files = entries(prompt.routine);
  if (files.empty()) {
    throw TerminalError(fmt::format("mock corpus has no entries for {} under {}",
                                    name_of(prompt.routine), root_.string()));
  }
  Completion c;
  c.text = slurp(files[static_cast<std::size_t>(sample_index) % files.size()]);
  c.tokens_in = approx_tokens(prompt.text.size());
  c.tokens_out = approx_tokens(c.text.size());
  return c;
}

fs::path replay_path(const fs::path& root, const std::string& model_id, PromptMode mode,
                     Routine routine, int sample_index) {
  return root / model_id / std::string(to_string(mode)) / std::string(name_of(routine)) /
         (std::to_string(sample_index) + ".c");
}

void save_replay(const fs::path& root, const KernelCandidate& c) {
  const fs::path src = replay_path(root, c.model_id, c.mode, c.routine, c.sample_index);
  fs::create_directories(src.parent_path());
  std::ofstream(src, std::ios::binary) << c.source;
  json meta{{"tokens_in", c.tokens_in},
            {"tokens_out", c.tokens_out},
            {"reasoning_tokens", c.reasoning_tokens},
            {"cost_usd", c.cost_usd},
            {"failure", c.failure}};
  std::ofstream(fs::path(src).replace_extension(".json")) << meta.dump(2) << '\n';
}

ReplayBackend::ReplayBackend(fs::path root) : root_(std::move(root)) {
  if (!fs::is_directory(root_)) throw TerminalError("replay store not found: " + root_.string());
}

Completion ReplayBackend::complete(const PromptBundle& prompt, const ModelProfile& profile,
                                   const SamplingConfig&, int sample_index) {
  const fs::path src = replay_path(root_, profile.model_id, prompt.mode, prompt.routine,
                                   sample_index);
  if (!fs::exists(src)) {
    throw ReplayMiss(fmt::format("replay miss: {}/{}/{}/{}", profile.model_id,
                                 to_string(prompt.mode), name_of(prompt.routine), sample_index));
  }
  Completion c;
  c.text = slurp(src);
  const fs::path meta = fs::path(src).replace_extension(".json");
  if (fs::exists(meta)) {
    const json j = json::parse(slurp(meta));
    c.tokens_in = j.value("tokens_in", std::int64_t{0});
    c.tokens_out = j.value("tokens_out", std::int64_t{0});
    c.reasoning_tokens = j.value("reasoning_tokens", std::int64_t{0});
    c.failure = j.value("failure", std::string());
  }
  return c;
}

LiveBackend::LiveBackend(LiveOptions opts) : opts_(std::move(opts)) {
  const char* key = std::getenv(opts_.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw TerminalError("environment variable " + opts_.api_key_env + " is not set");
  }
  key_ = key;
}

std::string LiveBackend::request_body(const PromptBundle& prompt, const ModelProfile& profile,
                                      const SamplingConfig& cfg) {
  json body{{"model", profile.model_id},
            {"messages", json::array({{{"role", "user"}, {"content", prompt.text}}})},
            {"n", 1}};
  if (cfg.send_sampling_params && !profile.reasoning) {
    body["temperature"] = cfg.temperature;
    body["top_p"] = cfg.top_p;
  }
  return body.dump();
}

namespace {

std::string provider_message(const std::string& body) {
  const json j = json::parse(body, nullptr, false);
  if (j.is_object() && j.contains("error") && j["error"].is_object()) {
    return j["error"].value("message", body);
  }
  return body;
}

bool quota_exhausted(const std::string& body) {
  const json j = json::parse(body, nullptr, false);
  if (!j.is_object() || !j.contains("error") || !j["error"].is_object()) return false;
  const json& e = j["error"];
  auto str = [&e](const char* k) {
    return e.contains(k) && e[k].is_string() ? e[k].get<std::string>() : std::string();
  };
  return str("code") == "insufficient_quota" || str("type") == "insufficient_quota";
}

}  // namespace

Completion LiveBackend::complete(const PromptBundle& prompt, const ModelProfile& profile,
                                 const SamplingConfig& cfg, int) {
  httplib::Client cli(opts_.base_url);
  cli.set_read_timeout(opts_.request_timeout);
  cli.set_write_timeout(std::chrono::seconds(60));
  cli.set_connection_timeout(std::chrono::seconds(30));
  const httplib::Headers headers{{"Authorization", "Bearer " + key_}};
  const std::string body = request_body(prompt, profile, cfg);

  Completion c;
  auto delay = opts_.backoff;
  for (int attempt = 1; attempt <= opts_.max_attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    auto res = cli.Post(opts_.path, headers, body, "application/json");
    if (!res) {
      c.failure = "transport: " + httplib::to_string(res.error());
      continue;
    }
    const int st = res->status;
    if (st == 401 || st == 403 || (st == 429 && quota_exhausted(res->body))) {
      throw TerminalError(fmt::format("HTTP {}: {}", st, provider_message(res->body)));
    }
    if (st == 408 || st == 429 || st >= 500) {
      c.failure = fmt::format("HTTP {}: {}", st, provider_message(res->body));
      continue;
    }
    if (st != 200) {
      throw TerminalError(fmt::format("HTTP {}: {}", st, provider_message(res->body)));
    }
    const json j = json::parse(res->body, nullptr, false);
    try {
      c.text = j.at("choices").at(0).at("message").at("content").get<std::string>();
      if (j.contains("usage")) {
        const json& u = j["usage"];
        c.tokens_in = u.value("prompt_tokens", std::int64_t{0});
        c.tokens_out = u.value("completion_tokens", std::int64_t{0});
        if (u.contains("completion_tokens_details") && u["completion_tokens_details"].is_object()) {
          c.reasoning_tokens =
              u["completion_tokens_details"].value("reasoning_tokens", std::int64_t{0});
        }
      }
      c.failure.clear();
    } catch (const json::exception& e) {
      c.text.clear();
      c.failure = std::string("malformed response: ") + e.what();
    }
    return c;
  }
  c.failure = "gave up after " + std::to_string(opts_.max_attempts) + " attempts (" +
              c.failure + ")";
  return c;
}

std::optional<std::string> strip_markdown_fences(const std::string& text) {
  const std::size_t open = text.find("```");
  if (open == std::string::npos) return std::nullopt;
  const std::size_t body = text.find('\n', open);
  if (body == std::string::npos) return std::nullopt;
  const std::size_t close = text.find("```", body + 1);
  if (close == std::string::npos) return std::nullopt;
  return text.substr(body + 1, close - body - 1);
}

std::vector<KernelCandidate> sample_candidates(Backend& backend, const PromptBundle& prompt,
                                               const ModelProfile& profile,
                                               const SamplingConfig& cfg) {
  if (cfg.n_samples < 1) throw std::invalid_argument("n_samples must be at least 1");
  std::vector<int> all(static_cast<std::size_t>(cfg.n_samples));
  for (int i = 0; i < cfg.n_samples; ++i) all[static_cast<std::size_t>(i)] = i;
  return sample_candidates(backend, prompt, profile, cfg, all);
}

std::vector<KernelCandidate> sample_candidates(Backend& backend, const PromptBundle& prompt,
                                               const ModelProfile& profile,
                                               const SamplingConfig& cfg,
                                               const std::vector<int>& indices) {
  const int total = static_cast<int>(indices.size());
  std::vector<KernelCandidate> out(indices.size());
  if (indices.empty()) return out;
  std::atomic<int> next{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto work = [&] {
    for (int slot; (slot = next.fetch_add(1)) < total;) {
      const int i = indices[static_cast<std::size_t>(slot)];
      {
        std::lock_guard<std::mutex> lock(err_mu);
        if (err) return;
      }
      KernelCandidate& k = out[static_cast<std::size_t>(slot)];
      k.routine = prompt.routine;
      k.mode = prompt.mode;
      k.model_id = profile.model_id;
      k.sample_index = i;
      try {
        Completion c = backend.complete(prompt, profile, cfg, i);
        k.source = std::move(c.text);
        k.tokens_in = c.tokens_in;
        k.tokens_out = c.tokens_out;
        k.reasoning_tokens = c.reasoning_tokens;
        k.failure = std::move(c.failure);
      } catch (const TerminalError&) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      } catch (const ReplayMiss&) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
      if (k.failure.empty() && k.source.empty()) k.failure = "empty response";
      if (cfg.salvage_fences) {
        if (auto s = strip_markdown_fences(k.source)) {
          k.source = std::move(*s);
          k.salvaged = true;
        }
      }
      k.cost_usd = cost_usd(profile, k.tokens_in, k.tokens_out);
    }
  };

  const int workers = std::clamp(cfg.max_in_flight, 1, total);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace blasgen
