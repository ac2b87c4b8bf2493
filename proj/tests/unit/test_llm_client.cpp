#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>

#include "blasgen/llm_client.hpp"
#include "blasgen/sandbox.hpp"
#include "paths.hpp"

using namespace blasgen;
using nlohmann::json;
namespace fs = std::filesystem;

TEST_CASE("model profiles") {
  const ModelProfile& g = gpt41_profile();
  CHECK(g.model_id == "gpt-4.1");
  CHECK(g.context_window == 1047576);
  CHECK(g.max_output_tokens == 32768);
  CHECK(g.price_in == 2.00);
  CHECK(g.price_out == 8.00);
  CHECK_FALSE(g.reasoning);
  const ModelProfile& o = o4mini_profile();
  CHECK(o.context_window == 200000);
  CHECK(o.max_output_tokens == 100000);
  CHECK(o.price_in == 1.10);
  CHECK(o.price_out == 4.40);
  CHECK(o.reasoning);
  CHECK(find_profile("o4-mini"));
  CHECK_FALSE(find_profile("gpt-5"));
}

TEST_CASE("cost arithmetic") {
  CHECK(cost_usd(gpt41_profile(), 1000000, 0) == doctest::Approx(2.00).epsilon(1e-15));
  CHECK(cost_usd(o4mini_profile(), 0, 500000) == doctest::Approx(2.20).epsilon(1e-15));
  CHECK(cost_usd(gpt41_profile(), 250000, 125000) == doctest::Approx(1.50).epsilon(1e-15));
  CHECK(cost_usd(o4mini_profile(), 0, 0) == 0.0);
}

namespace {

fs::path mini_corpus() {
  const fs::path root = make_scratch(testing::scratch_root(), "corpus");
  fs::create_directories(root / "dgemm");
  std::ofstream(root / "dgemm" / "b.c") << "int b;";
  std::ofstream(root / "dgemm" / "a.c") << "int a_is_first;";
  std::ofstream(root / "dgemm" / "c.c") << "int c;";
  std::ofstream(root / "dgemm" / "notes.txt") << "ignored";
  return root;
}

}  // namespace

TEST_CASE("mock backend serves sorted entries and wraps") {
  MockBackend mock(mini_corpus());
  const PromptBundle p = build_prompt(Routine::dgemm, PromptMode::NameToCcode);
  SamplingConfig cfg;
  cfg.n_samples = 3;
  auto got = sample_candidates(mock, p, gpt41_profile(), cfg);
  REQUIRE(got.size() == 3);
  CHECK(got[0].source == "int a_is_first;");
  CHECK(got[1].source == "int b;");
  CHECK(got[2].source == "int c;");
  cfg.n_samples = 7;
  got = sample_candidates(mock, p, gpt41_profile(), cfg);
  CHECK(got[3].source == "int a_is_first;");
  CHECK(got[6].source == "int a_is_first;");
  for (int i = 0; i < 7; ++i) {
    CHECK(got[static_cast<std::size_t>(i)].sample_index == i);
    CHECK(got[static_cast<std::size_t>(i)].failure.empty());
  }
  CHECK(got[0].tokens_in == static_cast<std::int64_t>((p.text.size() + 3) / 4));
  CHECK(got[0].tokens_out == 4);  // 15 bytes
  CHECK(got[0].cost_usd == cost_usd(gpt41_profile(), got[0].tokens_in, 4));
  const PromptBundle other = build_prompt(Routine::daxpy, PromptMode::NameToCcode);
  CHECK_THROWS_AS(sample_candidates(mock, other, gpt41_profile(), cfg), TerminalError);
}

TEST_CASE("replay store round trip") {
  const fs::path store = make_scratch(testing::scratch_root(), "replay");
  MockBackend mock(mini_corpus());
  const PromptBundle p = build_prompt(Routine::dgemm, PromptMode::NameToOptCcode);
  SamplingConfig cfg;
  cfg.n_samples = 10;
  const auto live = sample_candidates(mock, p, o4mini_profile(), cfg);
  for (const auto& c : live) save_replay(store, c);
  ReplayBackend replay(store);
  const auto again = sample_candidates(replay, p, o4mini_profile(), cfg);
  REQUIRE(again.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(again[i].source == live[i].source);
    CHECK(again[i].tokens_in == live[i].tokens_in);
    CHECK(again[i].tokens_out == live[i].tokens_out);
    CHECK(again[i].cost_usd == live[i].cost_usd);
  }
  fs::remove(replay_path(store, "o4-mini", PromptMode::NameToOptCcode, Routine::dgemm, 7));
  try {
    sample_candidates(replay, p, o4mini_profile(), cfg);
    FAIL("expected a replay miss");
  } catch (const ReplayMiss& e) {
    CHECK(std::string(e.what()).find("o4-mini/NameToOptCcode/dgemm/7") != std::string::npos);
  }
}

TEST_CASE("markdown fences") {
  CHECK_FALSE(strip_markdown_fences("int x;"));
  CHECK(strip_markdown_fences("```c\nint x;\n```\n") == "int x;\n");
  MockBackend mock(mini_corpus());
  SamplingConfig cfg;
  cfg.n_samples = 1;
  cfg.salvage_fences = true;
  const auto got =
      sample_candidates(mock, build_prompt(Routine::dgemm, PromptMode::NameToCcode),
                        gpt41_profile(), cfg);
  CHECK_FALSE(got[0].salvaged);
}

namespace {

struct FakeProvider {
  httplib::Server server;
  std::thread thread;
  int port = 0;
  std::atomic<int> calls{0};
  std::atomic<int> in_flight{0};
  std::atomic<int> peak{0};
  std::mutex mu;
  std::vector<json> bodies;
  std::function<void(int call, httplib::Response&)> reply;

  FakeProvider() {
    server.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                               httplib::Response& res) {
      const int now = ++in_flight;
      int p = peak.load();
      while (now > p && !peak.compare_exchange_weak(p, now)) {
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        bodies.push_back(json::parse(req.body));
      }
      CHECK(req.get_header_value("Authorization") == "Bearer test-key");
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
      reply(calls++, res);
      --in_flight;
    });
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~FakeProvider() {
    server.stop();
    thread.join();
  }
  LiveOptions options() const {
    LiveOptions o;
    o.base_url = "http://127.0.0.1:" + std::to_string(port);
    o.api_key_env = "BLASGEN_TEST_KEY";
    o.backoff = std::chrono::milliseconds(1);
    o.max_attempts = 3;
    return o;
  }
};

void ok_reply(httplib::Response& res, const std::string& text) {
  json j{{"choices", {{{"message", {{"role", "assistant"}, {"content", text}}}}}},
         {"usage",
          {{"prompt_tokens", 100},
           {"completion_tokens", 50},
           {"completion_tokens_details", {{"reasoning_tokens", 20}}}}}};
  res.set_content(j.dump(), "application/json");
}

void error_reply(httplib::Response& res, int status, const std::string& code,
                 const std::string& msg) {
  res.status = status;
  json j{{"error", {{"message", msg}, {"code", code}, {"type", code}}}};
  res.set_content(j.dump(), "application/json");
}

}  // namespace

TEST_CASE("live backend against a local server") {
  setenv("BLASGEN_TEST_KEY", "test-key", 1);
  FakeProvider fake;
  const PromptBundle p = build_prompt(Routine::ddot, PromptMode::NameToCcode);

  SUBCASE("success, usage and request shape") {
    fake.reply = [](int call, httplib::Response& res) { ok_reply(res, "src" + std::to_string(call)); };
    LiveBackend live(fake.options());
    SamplingConfig cfg;
    cfg.n_samples = 6;
    cfg.max_in_flight = 2;
    const auto got = sample_candidates(live, p, gpt41_profile(), cfg);
    REQUIRE(got.size() == 6);
    CHECK(fake.peak.load() <= 2);
    for (const auto& c : got) {
      CHECK(c.failure.empty());
      CHECK(c.source.rfind("src", 0) == 0);
      CHECK(c.tokens_in == 100);
      CHECK(c.tokens_out == 50);
      CHECK(c.reasoning_tokens == 20);
      CHECK(c.cost_usd == doctest::Approx(100 * 2.0 / 1e6 + 50 * 8.0 / 1e6));
    }
    const json& b = fake.bodies.front();
    CHECK(b["model"] == "gpt-4.1");
    CHECK(b["messages"][0]["content"] == p.text);
    CHECK(b["n"] == 1);
    CHECK(b["temperature"] == 1.0);
    CHECK(b["top_p"] == 1.0);
    fake.bodies.clear();
    cfg.n_samples = 1;
    sample_candidates(live, p, o4mini_profile(), cfg);
    CHECK_FALSE(fake.bodies.front().contains("temperature"));
    CHECK_FALSE(fake.bodies.front().contains("top_p"));
  }

  SUBCASE("transient failures are retried") {
    fake.reply = [](int call, httplib::Response& res) {
      if (call < 2) {
        error_reply(res, 503, "overloaded", "try later");
      } else {
        ok_reply(res, "int x;");
      }
    };
    LiveBackend live(fake.options());
    SamplingConfig cfg;
    cfg.n_samples = 1;
    const auto got = sample_candidates(live, p, gpt41_profile(), cfg);
    CHECK(got[0].source == "int x;");
    CHECK(fake.calls.load() == 3);
  }

  SUBCASE("persistent failure is recorded on the candidate") {
    fake.reply = [](int, httplib::Response& res) { error_reply(res, 500, "server_error", "boom"); };
    LiveBackend live(fake.options());
    SamplingConfig cfg;
    cfg.n_samples = 2;
    cfg.max_in_flight = 1;
    const auto got = sample_candidates(live, p, gpt41_profile(), cfg);
    CHECK(fake.calls.load() == 6);
    for (const auto& c : got) {
      CHECK(c.source.empty());
      CHECK(c.failure.find("boom") != std::string::npos);
    }
  }

  SUBCASE("authentication failure is terminal") {
    fake.reply = [](int, httplib::Response& res) {
      error_reply(res, 401, "invalid_api_key", "Incorrect API key provided");
    };
    LiveBackend live(fake.options());
    SamplingConfig cfg;
    cfg.n_samples = 3;
    CHECK_THROWS_WITH_AS(sample_candidates(live, p, gpt41_profile(), cfg),
                         doctest::Contains("Incorrect API key provided"), TerminalError);
  }

  SUBCASE("exhausted quota is terminal") {
    fake.reply = [](int, httplib::Response& res) {
      error_reply(res, 429, "insufficient_quota", "You exceeded your current quota");
    };
    LiveBackend live(fake.options());
    SamplingConfig cfg;
    cfg.n_samples = 1;
    CHECK_THROWS_AS(sample_candidates(live, p, gpt41_profile(), cfg), TerminalError);
    CHECK(fake.calls.load() == 1);
  }
}

TEST_CASE("live backend needs a key") {
  LiveOptions o;
  o.api_key_env = "BLASGEN_DEFINITELY_UNSET_KEY";
  unsetenv(o.api_key_env.c_str());
  CHECK_THROWS_AS(LiveBackend{o}, TerminalError);
}
