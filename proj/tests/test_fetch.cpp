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
#include <gtest/gtest.h>
#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <thread>

#include "alphaeff/fetch.hpp"

using namespace alphaeff;
namespace fs = std::filesystem;

namespace {

constexpr const char* kBody =
    "year,rank,name,rmax_tflops,rpeak_tflops,cores\n"
    "2016,1,Sunway TaihuLight,93014.6,125435.9,10649600\n";

class FetchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("alphaeff-fetch-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  FetchOptions counting(HttpResponse response, bool force = false) {
    FetchOptions o;
    o.force = force;
    o.get = [this, response](const std::string&) {
      ++calls_;
      return response;
    };
    return o;
  }

  fs::path dir_;
  int calls_ = 0;
};

}  // namespace

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(SplitUrl, Parts) {
  const auto p = split_url("https://example.org:8443/lists/2016.csv?x=1");
  EXPECT_EQ(p.origin, "https://example.org:8443");
  EXPECT_EQ(p.path, "/lists/2016.csv?x=1");
  EXPECT_EQ(split_url("http://h").path, "/");
  EXPECT_THROW(split_url("ftp://h/x"), ParameterError);
  EXPECT_THROW(split_url("no-scheme"), ParameterError);
  EXPECT_THROW(split_url("http:///path"), ParameterError);
}

TEST_F(FetchTest, ColdThenWarmCache) {
  const std::string url = "https://example.org/top500.csv";
  const auto first = fetch_ranking(url, dir_, counting({200, kBody}));
  EXPECT_EQ(calls_, 1);
  EXPECT_EQ(first.dataset.records.size(), 1u);
  EXPECT_EQ(first.dataset.source, url);
  EXPECT_FALSE(first.dataset.retrieved_at.empty());

  const auto entry = cache_entry(url, dir_);
  EXPECT_EQ(entry.body.filename(), sha256_hex(url) + ".csv");
  EXPECT_TRUE(fs::exists(entry.body));
  EXPECT_TRUE(fs::exists(entry.meta));

  // Warm: the getter would fail, but it is never called.
  const auto second = fetch_ranking(url, dir_, counting({500, ""}));
  EXPECT_EQ(calls_, 1);
  EXPECT_EQ(second.dataset.records[0].name, "Sunway TaihuLight");
  EXPECT_EQ(second.dataset.retrieved_at, first.dataset.retrieved_at);
}

TEST_F(FetchTest, ForceRefetches) {
  const std::string url = "https://example.org/a.csv";
  fetch_ranking(url, dir_, counting({200, kBody}));
  const std::string newer = std::string(kBody) + "2016,2,Other,10,20,1000\n";
  const auto p = fetch_ranking(url, dir_, counting({200, newer}, true));
  EXPECT_EQ(calls_, 2);
  EXPECT_EQ(p.dataset.records.size(), 2u);
  EXPECT_EQ(fetch_ranking(url, dir_, counting({404, ""})).dataset.records.size(), 2u);
}

TEST_F(FetchTest, HttpErrorsAndBadPayloadLeaveCacheEmpty) {
  const std::string url = "https://example.org/missing.csv";
  EXPECT_THROW(fetch_ranking(url, dir_, counting({404, "not found"})), RetrievalError);
  EXPECT_THROW(fetch_ranking(url, dir_, counting({200, "<html>oops</html>"})), FormatError);
  EXPECT_FALSE(fs::exists(cache_entry(url, dir_).body));

  FetchOptions throwing;
  throwing.get = [](const std::string&) -> HttpResponse { throw std::runtime_error("no route"); };
  EXPECT_THROW(fetch_ranking(url, dir_, throwing), RetrievalError);
}

TEST_F(FetchTest, RealTransportAgainstLocalServer) {
  httplib::Server server;
  std::atomic<int> hits{0};
  server.Get("/list.csv", [&](const httplib::Request&, httplib::Response& res) {
    ++hits;
    res.set_content(kBody, "text/csv");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  const std::string base = "http://127.0.0.1:" + std::to_string(port);
  const auto p = fetch_ranking(base + "/list.csv", dir_);
  EXPECT_EQ(p.dataset.records.size(), 1u);
  fetch_ranking(base + "/list.csv", dir_);
  EXPECT_EQ(hits.load(), 1);
  EXPECT_THROW(fetch_ranking(base + "/nope.csv", dir_), RetrievalError);

  server.stop();
  t.join();
  // Server gone: the warm entry still answers, a cold one fails.
  EXPECT_NO_THROW(fetch_ranking(base + "/list.csv", dir_));
  EXPECT_THROW(fetch_ranking(base + "/other.csv", dir_), RetrievalError);
}

TEST_F(FetchTest, ConcurrentFetchesOfSameUrl) {
  const std::string url = "https://example.org/c.csv";
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      FetchOptions o;
      o.force = true;
      o.get = [](const std::string&) { return HttpResponse{200, kBody}; };
      if (fetch_ranking(url, dir_, o).dataset.records.size() == 1) ++ok;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 8);
  EXPECT_EQ(fetch_ranking(url, dir_, counting({500, ""})).dataset.records.size(), 1u);
}
