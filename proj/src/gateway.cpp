#include "indalign/gateway.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <semaphore>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "indalign/hash.hpp"

namespace indalign {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

bool transient_status(int status) {
    return status == 408 || status == 429 || (status >= 500 && status < 600);
}

// scheme://host[:port][/path] -> (base, path)
struct SplitUrl {
    std::string base;
    std::string path;
};

SplitUrl split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("endpoint_url needs a scheme: " + url);
    }
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

void GatewayConfig::validate() const {
    if (!std::isfinite(temperature) || temperature < 0) {
        throw ConfigError("gateway temperature must be finite and >= 0");
    }
    if (max_tokens <= 0) throw ConfigError("gateway max_tokens must be positive");
    if (max_retries < 0) throw ConfigError("gateway max_retries must be >= 0");
    if (max_concurrent_requests <= 0) {
        throw ConfigError("gateway max_concurrent_requests must be positive");
    }
}

// ---------------------------------------------------------------------------
// HttpGateway

struct HttpGateway::Impl {
    SplitUrl url;
    std::counting_semaphore<> admission;

    explicit Impl(const GatewayConfig& config)
        : url(split_url(config.endpoint_url)), admission(config.max_concurrent_requests) {}
};

HttpGateway::HttpGateway(GatewayConfig config) : config_(std::move(config)) {
    config_.validate();
    if (config_.endpoint_url.empty()) throw ConfigError("gateway endpoint_url is empty");
    if (config_.api_key.empty()) {
        if (const char* env = std::getenv("INDALIGN_API_KEY")) config_.api_key = env;
    }
    impl_ = std::make_unique<Impl>(config_);
}

HttpGateway::~HttpGateway() = default;

ChatResponse HttpGateway::do_complete(const std::string& prompt) {
    if (prompt.empty()) throw Error("prompt is empty");

    impl_->admission.acquire();
    struct Release {
        std::counting_semaphore<>& sem;
        ~Release() { sem.release(); }
    } release{impl_->admission};

    json request = {{"model", config_.model_name},
                    {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
                    {"temperature", config_.temperature},
                    {"max_tokens", config_.max_tokens}};
    const std::string body = request.dump();

    auto start = std::chrono::steady_clock::now();
    std::string last_error;
    bool last_was_timeout = false;

    for (int attempt = 1; attempt <= config_.max_retries + 1; ++attempt) {
        if (attempt > 1) {
            auto delay = config_.backoff_initial * (1LL << (attempt - 2));
            std::this_thread::sleep_for(delay);
        }

        httplib::Client client(impl_->url.base);
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
        auto usecs =
            std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - secs);
        client.set_connection_timeout(secs.count(), usecs.count());
        client.set_read_timeout(secs.count(), usecs.count());
        client.set_write_timeout(secs.count(), usecs.count());
        httplib::Headers headers;
        if (!config_.api_key.empty()) {
            headers.emplace("Authorization", "Bearer " + config_.api_key);
        }

        auto res = client.Post(impl_->url.path, headers, body, "application/json");
        if (!res) {
            last_was_timeout = res.error() == httplib::Error::ConnectionTimeout ||
                               res.error() == httplib::Error::Read ||
                               res.error() == httplib::Error::Write;
            last_error = httplib::to_string(res.error());
            continue;  // transport-level failure, retry
        }
        if (res->status < 200 || res->status >= 300) {
            last_error = "HTTP " + std::to_string(res->status);
            last_was_timeout = false;
            if (transient_status(res->status)) continue;
            throw TransportError("gateway request failed: " + last_error);
        }

        json reply = json::parse(res->body, nullptr, false);
        if (reply.is_discarded()) {
            throw TransportError("gateway returned non-JSON body");
        }
        std::string text;
        if (reply.contains("choices") && reply["choices"].is_array() &&
            !reply["choices"].empty()) {
            const auto& choice = reply["choices"][0];
            if (choice.contains("message") && choice["message"].contains("content")) {
                text = choice["message"]["content"].get<std::string>();
            } else if (choice.contains("text")) {
                text = choice["text"].get<std::string>();
            }
        } else if (reply.contains("message") && reply["message"].contains("content")) {
            text = reply["message"]["content"].get<std::string>();
        } else if (reply.contains("response") && reply["response"].is_string()) {
            text = reply["response"].get<std::string>();
        }
        if (text.empty() && !(reply.contains("choices") || reply.contains("message") ||
                              reply.contains("response"))) {
            throw TransportError("gateway response carries no completion text");
        }

        ChatResponse out;
        out.text = std::move(text);
        out.attempt = attempt;
        out.latency = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        return out;
    }

    std::string msg = "gateway unreachable after " + std::to_string(config_.max_retries + 1) +
                      " attempts: " + last_error;
    if (last_was_timeout) throw TimeoutError(msg);
    throw TransportError(msg);
}

// ---------------------------------------------------------------------------
// StubGateway

StubGateway::StubGateway(std::string model_name) : model_name_(std::move(model_name)) {}

StubGateway StubGateway::from_file(const std::filesystem::path& path, std::string model_name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open stub fixture file: " + path.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        throw ParseError("stub fixture file must be a JSON object: " + path.string());
    }
    StubGateway stub(std::move(model_name));
    for (const auto& [key, value] : j.items()) {
        if (value.is_string()) {
            stub.script_hash(key, {value.get<std::string>()});
        } else if (value.is_array()) {
            std::vector<std::string> seq;
            for (const auto& item : value) seq.push_back(item.get<std::string>());
            stub.script_hash(key, std::move(seq));
        } else {
            throw ParseError("stub fixture values must be strings or string arrays");
        }
    }
    return stub;
}

void StubGateway::save(const std::filesystem::path& path) const {
    std::lock_guard lock(mutex_);
    json j = json::object();
    for (const auto& [key, entry] : entries_) {
        if (entry.responses.size() == 1) {
            j[key] = entry.responses.front();
        } else {
            j[key] = entry.responses;
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << j.dump(2) << '\n';
}

void StubGateway::script(const std::string& prompt, std::string response) {
    script_sequence(prompt, {std::move(response)});
}

void StubGateway::script_sequence(const std::string& prompt, std::vector<std::string> responses) {
    script_hash(sha256_hex(prompt), std::move(responses));
}

void StubGateway::script_hash(std::string prompt_hash, std::vector<std::string> responses) {
    if (responses.empty()) throw Error("stub sequence must not be empty");
    std::lock_guard lock(mutex_);
    entries_[std::move(prompt_hash)] = Entry{std::move(responses), 0};
}

ChatResponse StubGateway::do_complete(const std::string& prompt) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(sha256_hex(prompt));
    if (it == entries_.end()) {
        throw TransportError("stub gateway has no response scripted for this prompt");
    }
    Entry& entry = it->second;
    ChatResponse out;
    out.text = entry.responses[std::min(entry.next, entry.responses.size() - 1)];
    out.attempt = 1;
    ++entry.next;
    return out;
}

// ---------------------------------------------------------------------------
// Response parsers

ParsedValue parse_binary(const std::string& text) {
    const std::string normalized = upper(trim(text));

    // First token, trailing punctuation stripped.
    std::string first = normalized.substr(0, normalized.find_first_of(" \t\r\n"));
    while (!first.empty() && !std::isalnum(static_cast<unsigned char>(first.back()))) {
        first.pop_back();
    }
    auto make = [&](long long v) {
        return ParsedValue{ParsedValue::Kind::Binary, v, text};
    };
    if (first == "YES") return make(1);
    if (first == "NO") return make(0);

    // Fallback: accept the whole text when exactly one of the two words occurs.
    int yes = 0;
    int no = 0;
    std::string token;
    auto flush = [&] {
        if (token == "YES") ++yes;
        else if (token == "NO") ++no;
        token.clear();
    };
    for (char c : normalized) {
        if (std::isalnum(static_cast<unsigned char>(c))) token.push_back(c);
        else flush();
    }
    flush();
    if (yes > 0 && no == 0) return make(1);
    if (no > 0 && yes == 0) return make(0);
    throw UnparseableResponse(yes || no ? "response contains both YES and NO"
                                        : "response contains neither YES nor NO");
}

namespace {

// First balanced {...} or [...] region, brackets inside string literals ignored.
std::optional<std::string> first_balanced_json(const std::string& text) {
    std::size_t start = text.find_first_of("{[");
    if (start == std::string::npos) return std::nullopt;

    std::vector<char> stack;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (escaped) escaped = false;
            else if (c == '\\') escaped = true;
            else if (c == '"') in_string = false;
            continue;
        }
        switch (c) {
            case '"': in_string = true; break;
            case '{': stack.push_back('}'); break;
            case '[': stack.push_back(']'); break;
            case '}':
            case ']':
                if (stack.empty() || stack.back() != c) return std::nullopt;  // unbalanced
                stack.pop_back();
                if (stack.empty()) return text.substr(start, i - start + 1);
                break;
            default: break;
        }
    }
    return std::nullopt;
}

long long count_json(const json& j) {
    if (j.is_array()) return static_cast<long long>(j.size());
    if (j.is_object()) {
        // Array values contribute their length, anything else counts 1; this
        // reduces to "total elements" for keyed lists and "key count" for
        // scalar maps.
        long long total = 0;
        for (const auto& [key, value] : j.items()) {
            (void)key;
            total += value.is_array() ? static_cast<long long>(value.size()) : 1;
        }
        return total;
    }
    throw UnparseableResponse("JSON payload is neither an object nor an array");
}

}  // namespace

ParsedValue parse_list(const std::string& text) {
    auto region = first_balanced_json(text);
    if (!region) throw UnparseableResponse("no balanced JSON object or array in response");
    json j = json::parse(*region, nullptr, false);
    if (j.is_discarded()) {
        throw UnparseableResponse("balanced region is not valid JSON: " + *region);
    }
    return ParsedValue{ParsedValue::Kind::Count, count_json(j), text};
}

}  // namespace indalign
