/*
 * Copyright 2026 The alphaeff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Single-URL retrieval of a ranking CSV with an on-disk cache.
//
// Cache layout, one entry per URL:
//   <cache_dir>/<sha256(url)>.csv    raw response body
//   <cache_dir>/<sha256(url)>.meta   "<url>\t<UTC timestamp>\n"
//
// A cached body is reused without touching the network unless `force` is
// set. A body is cached only after it parses as a ranking CSV.
//
// Requires cpp-httplib (httplib.h) and OpenSSL (libcrypto for SHA-256,
// libssl for https when CPPHTTPLIB_OPENSSL_SUPPORT is defined).

#pragma once

#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>

#include <httplib.h>

#include "alphaeff/error.hpp"
#include "alphaeff/ingest.hpp"

namespace alphaeff {

inline std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256: EVP_Digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// Performs one GET. Throws RetrievalError when no response was received.
using HttpGet = std::function<HttpResponse(const std::string& url)>;

struct UrlParts {
  std::string origin;  // scheme://host[:port]
  std::string path;    // starts with '/'
};

inline UrlParts split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ParameterError("not an absolute URL: " + url);
  const auto scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ParameterError("only http and https URLs are supported, got: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == scheme_end + 3) throw ParameterError("URL has no host: " + url);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

inline HttpResponse httplib_get(const std::string& url) {
  const auto parts = split_url(url);
  httplib::Client client(parts.origin);
  client.set_follow_location(true);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  auto res = client.Get(parts.path);
  if (!res) {
    throw RetrievalError("GET " + url + " failed: " + httplib::to_string(res.error()));
  }
  return {res->status, res->body};
}

struct FetchOptions {
  /// Ignore a warm cache and download again.
  bool force = false;
  HttpGet get = httplib_get;
};

struct CacheEntry {
  std::filesystem::path body;
  std::filesystem::path meta;
};

inline CacheEntry cache_entry(const std::string& url, const std::filesystem::path& cache_dir) {
  const auto key = sha256_hex(url);
  return {cache_dir / (key + ".csv"), cache_dir / (key + ".meta")};
}

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes via a temporary file and rename so readers never see a partial file.
inline void write_file_atomic(const std::filesystem::path& p, std::string_view bytes) {
  auto tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

inline ParsedRanking fetch_ranking(const std::string& url, const std::filesystem::path& cache_dir,
                                   const FetchOptions& options = {}) {
  split_url(url);  // validates
  const auto entry = cache_entry(url, cache_dir);

  if (!options.force && std::filesystem::exists(entry.body)) {
    std::string retrieved_at;
    if (std::filesystem::exists(entry.meta)) {
      const auto meta = detail::read_file(entry.meta);
      if (const auto tab = meta.find('\t'); tab != std::string::npos) {
        retrieved_at = meta.substr(tab + 1);
        while (!retrieved_at.empty() && (retrieved_at.back() == '\n' || retrieved_at.back() == '\r')) {
          retrieved_at.pop_back();
        }
      }
    }
    return parse_ranking_csv(detail::read_file(entry.body), url, retrieved_at);
  }

  HttpResponse response;
  try {
    response = options.get(url);
  } catch (const RetrievalError&) {
    throw;
  } catch (const std::exception& e) {
    throw RetrievalError("GET " + url + " failed: " + e.what());
  }
  if (response.status != 200) {
    throw RetrievalError("GET " + url + " returned HTTP " + std::to_string(response.status));
  }

  const auto retrieved_at = detail::utc_timestamp();
  auto parsed = parse_ranking_csv(response.body, url, retrieved_at);

  std::lock_guard lock(detail::cache_mutex());
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw Error("cannot create cache directory " + cache_dir.string() + ": " + ec.message());
  detail::write_file_atomic(entry.body, response.body);
  detail::write_file_atomic(entry.meta, url + '\t' + retrieved_at + '\n');
  return parsed;
}

}  // namespace alphaeff
