#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "blogstack/blog_index.hpp"
#include "blogstack/searcher.hpp"
#include "blogstack/summarizer.hpp"
#include "blogstack/textprep.hpp"

namespace {

// ~100 tokens per summary over a 2000-word vocabulary, fixed seed.
std::vector<blogstack::Summary> make_summaries(std::size_t count) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> word(0, 1999);
  std::uniform_int_distribution<int> heading_len(2, 5);
  std::uniform_int_distribution<int> sentence_len(8, 14);

  auto make_word = [&] { return "term" + std::to_string(word(rng)); };

  std::vector<blogstack::Summary> summaries;
  summaries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    blogstack::Summary s;
    s.summary_id = "B" + std::to_string(i + 1);
    s.page_id = "page" + std::to_string(i + 1);
    int hl = heading_len(rng);
    for (int w = 0; w < hl; ++w) {
      if (w) s.heading += ' ';
      s.heading += make_word();
    }
    int tokens = 0;
    while (tokens < 100) {
      std::string sentence;
      int sl = sentence_len(rng);
      for (int w = 0; w < sl; ++w) {
        if (w) sentence += ' ';
        sentence += make_word();
      }
      sentence += '.';
      s.sentences.push_back(std::move(sentence));
      tokens += sl;
    }
    summaries.push_back(std::move(s));
  }
  return summaries;
}

void BM_BuildIndex(benchmark::State& state) {
  auto summaries = make_summaries(static_cast<std::size_t>(state.range(0)));
  const auto& stops = blogstack::StopwordList::default_list();
  for (auto _ : state) {
    auto index = blogstack::build_index(summaries, stops);
    benchmark::DoNotOptimize(index);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildIndex)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Query(benchmark::State& state) {
  auto summaries = make_summaries(static_cast<std::size_t>(state.range(0)));
  const auto& stops = blogstack::StopwordList::default_list();
  auto index = blogstack::build_index(summaries, stops);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> word(0, 1999);
  for (auto _ : state) {
    std::string query = "term" + std::to_string(word(rng)) + " term" + std::to_string(word(rng)) +
                        " term" + std::to_string(word(rng));
    auto out = blogstack::search(index, query, stops);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_Query)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_SerializeIndex(benchmark::State& state) {
  auto summaries = make_summaries(static_cast<std::size_t>(state.range(0)));
  auto index = blogstack::build_index(summaries, blogstack::StopwordList::default_list());
  for (auto _ : state) {
    auto text = blogstack::serialize_index(index);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(BM_SerializeIndex)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
