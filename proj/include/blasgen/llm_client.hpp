#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blasgen/promptkit.hpp"

namespace blasgen {

struct ModelProfile {
  std::string model_id;
  std::int64_t context_window = 0;
  std::int64_t max_output_tokens = 0;
  double price_in = 0.0;   // USD per 1M input tokens
  double price_out = 0.0;  // USD per 1M output tokens
  bool reasoning = false;
};

const ModelProfile& gpt41_profile();
const ModelProfile& o4mini_profile();
std::optional<ModelProfile> find_profile(std::string_view model_id);

double cost_usd(const ModelProfile& p, std::int64_t tokens_in, std::int64_t tokens_out);

struct SamplingConfig {
  int n_samples = 10;
  double temperature = 1.0;
  double top_p = 1.0;
  bool send_sampling_params = true;  // ignored for reasoning models
  int max_in_flight = 4;
  bool salvage_fences = false;
};

struct KernelCandidate {
  Routine routine = Routine::dasum;
  PromptMode mode = PromptMode::NameToCcode;
  std::string model_id;
  int sample_index = 0;
  std::string source;
  std::int64_t tokens_in = 0;
  std::int64_t tokens_out = 0;
  std::int64_t reasoning_tokens = 0;  // already included in tokens_out
  double cost_usd = 0.0;
  std::string failure;  // empty on success
  bool salvaged = false;
};

/// Raw result of one request.
struct Completion {
  std::string text;
  std::int64_t tokens_in = 0;
  std::int64_t tokens_out = 0;
  std::int64_t reasoning_tokens = 0;
  std::string failure;
};

/// Authentication, quota or configuration problems that retrying cannot fix.
class TerminalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReplayMiss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Backend {
 public:
  virtual ~Backend() = default;
  virtual Completion complete(const PromptBundle& prompt, const ModelProfile& profile,
                              const SamplingConfig& cfg, int sample_index) = 0;
};

/// Serves corpus/<routine>/*.c in file-name order; the sample index wraps.
/// Token counts are ceil(bytes / 4) of the prompt and of the source.
class MockBackend : public Backend {
 public:
  explicit MockBackend(std::filesystem::path corpus_root);
  Completion complete(const PromptBundle& prompt, const ModelProfile& profile,
                      const SamplingConfig& cfg, int sample_index) override;
  std::vector<std::filesystem::path> entries(Routine r) const;

 private:
  std::filesystem::path root_;
};

/// Layout: <root>/<model>/<mode>/<routine>/<index>.c plus <index>.json with
/// the token counts.
class ReplayBackend : public Backend {
 public:
  explicit ReplayBackend(std::filesystem::path root);
  Completion complete(const PromptBundle& prompt, const ModelProfile& profile,
                      const SamplingConfig& cfg, int sample_index) override;

 private:
  std::filesystem::path root_;
};

std::filesystem::path replay_path(const std::filesystem::path& root, const std::string& model_id,
                                  PromptMode mode, Routine routine, int sample_index);
void save_replay(const std::filesystem::path& root, const KernelCandidate& c);

struct LiveOptions {
  std::string base_url = "https://api.openai.com";
  std::string path = "/v1/chat/completions";
  std::string api_key_env = "OPENAI_API_KEY";
  int max_attempts = 4;
  std::chrono::milliseconds backoff{1000};  // doubles per attempt
  std::chrono::seconds request_timeout{600};
};

/// Chat-completion client, one sample per request.
class LiveBackend : public Backend {
 public:
  explicit LiveBackend(LiveOptions opts);
  Completion complete(const PromptBundle& prompt, const ModelProfile& profile,
                      const SamplingConfig& cfg, int sample_index) override;

  /// The JSON body sent for one sample.
  static std::string request_body(const PromptBundle& prompt, const ModelProfile& profile,
                                  const SamplingConfig& cfg);

 private:
  LiveOptions opts_;
  std::string key_;
};

/// Drops a surrounding ``` fence pair; nullopt when there is none.
std::optional<std::string> strip_markdown_fences(const std::string& text);

/// Exactly cfg.n_samples candidates ordered by sample index. Up to
/// cfg.max_in_flight requests run at once. TerminalError propagates.
std::vector<KernelCandidate> sample_candidates(Backend& backend, const PromptBundle& prompt,
                                               const ModelProfile& profile,
                                               const SamplingConfig& cfg);
/// Only the listed sample indices, in the given order.
std::vector<KernelCandidate> sample_candidates(Backend& backend, const PromptBundle& prompt,
                                               const ModelProfile& profile,
                                               const SamplingConfig& cfg,
                                               const std::vector<int>& indices);

}  // namespace blasgen
