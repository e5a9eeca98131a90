#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "indalign/errors.hpp"

namespace indalign {

struct GatewayConfig {
    std::string endpoint_url;
    std::string model_name = "llama3.1";
    double temperature = 0.0;
    int max_tokens = 256;
    std::chrono::milliseconds timeout{30000};
    int max_retries = 2;
    int max_concurrent_requests = 4;
    std::chrono::milliseconds backoff_initial{200};  // doubled per transport retry
    std::string api_key;                             // empty -> INDALIGN_API_KEY env

    void validate() const;  // throws ConfigError
};

struct ChatResponse {
    std::string text;
    std::chrono::milliseconds latency{0};
    int attempt = 1;  // transport attempts used, <= max_retries + 1
};

class Gateway {
  public:
    virtual ~Gateway() = default;

    // Returns the model's completion for `prompt`. Transient transport
    // failures are retried with exponential backoff; throws TransportError
    // (or TimeoutError) once retries are exhausted.
    ChatResponse complete(const std::string& prompt) {
        calls_.fetch_add(1, std::memory_order_relaxed);
        return do_complete(prompt);
    }

    virtual const std::string& model_name() const = 0;
    virtual int concurrency_limit() const = 0;

    std::int64_t calls_issued() const { return calls_.load(std::memory_order_relaxed); }

  protected:
    virtual ChatResponse do_complete(const std::string& prompt) = 0;

  private:
    std::atomic<std::int64_t> calls_{0};
};

// Chat-completion JSON HTTP client. Request body:
//   {model, messages:[{role:"user", content}], temperature, max_tokens}
// The generated text is read from choices[0].message.content with fallbacks
// for the common open-model server variants (choices[0].text, message.content,
// response).
class HttpGateway final : public Gateway {
  public:
    explicit HttpGateway(GatewayConfig config);
    ~HttpGateway() override;

    const std::string& model_name() const override { return config_.model_name; }
    int concurrency_limit() const override { return config_.max_concurrent_requests; }

  protected:
    ChatResponse do_complete(const std::string& prompt) override;

  private:
    struct Impl;
    GatewayConfig config_;
    std::unique_ptr<Impl> impl_;
};

// Deterministic offline gateway: responses keyed by SHA-256(prompt).
// A key may script a sequence of responses consumed in call order (the last
// entry repeats). Unknown prompts throw TransportError.
class StubGateway final : public Gateway {
  public:
    explicit StubGateway(std::string model_name = "stub");

    // Fixture file: JSON object {sha256_hex: response | [responses...]}.
    static StubGateway from_file(const std::filesystem::path& path, std::string model_name = "stub");
    void save(const std::filesystem::path& path) const;

    void script(const std::string& prompt, std::string response);
    void script_sequence(const std::string& prompt, std::vector<std::string> responses);
    void script_hash(std::string prompt_hash, std::vector<std::string> responses);

    const std::string& model_name() const override { return model_name_; }
    int concurrency_limit() const override { return 64; }

  protected:
    ChatResponse do_complete(const std::string& prompt) override;

  private:
    struct Entry {
        std::vector<std::string> responses;
        std::size_t next = 0;
    };
    std::string model_name_;
    mutable std::mutex mutex_;
    std::map<std::string, Entry> entries_;
};

// Outcome of parsing one model response.
struct ParsedValue {
    enum class Kind { Binary, Count };
    Kind kind = Kind::Binary;
    long long value = 0;  // Binary: 0/1, Count: >= 0
    std::string raw_response;
};

// YES/NO responses. Normalizes case, whitespace and trailing punctuation of
// the first token; falls back to a whole-text scan when exactly one of the
// two words occurs. Throws UnparseableResponse otherwise.
ParsedValue parse_binary(const std::string& text);

// Finds the first balanced JSON object/array (brackets inside string
// literals ignored) and counts it: bare array -> element count, object ->
// array values contribute their length, other values contribute 1.
// Throws UnparseableResponse if no balanced region exists or it is invalid JSON.
ParsedValue parse_list(const std::string& text);

}  // namespace indalign
