#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "blogstack/errors.hpp"
#include "blogstack/eval.hpp"

using namespace blogstack;

TEST_CASE("precision recall and f-measure formulas") {
  CHECK(precision(8, 2) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(precision(0, 0) == 0.0);
  CHECK(precision(5, 0) == 1.0);

  CHECK(recall(8, 2) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(recall(0, 5) == 0.0);
  CHECK(recall(3, 0) == 1.0);

  CHECK(f_measure(0.8, 0.8) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(f_measure(1.0, 0.0) == 0.0);
  CHECK(f_measure(0.0, 0.0) == 0.0);
  CHECK(f_measure(0.5, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("evaluate_run counts the three sets") {
  auto report = evaluate_run({"B4", "B1", "B5"}, {"B4", "B5"});
  CHECK(report.rb == 2);
  CHECK(report.ib == 1);
  CHECK(report.nb == 0);
  CHECK(report.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(report.recall == 1.0);
  CHECK(report.f_measure == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("empty run and empty judgments conventions") {
  auto empty_run = evaluate_run({}, {"B1"});
  CHECK(empty_run.rb == 0);
  CHECK(empty_run.ib == 0);
  CHECK(empty_run.nb == 1);
  CHECK(empty_run.precision == 0.0);
  CHECK(empty_run.recall == 0.0);
  CHECK(empty_run.f_measure == 0.0);

  auto no_relevant = evaluate_run({"B1"}, {});
  CHECK(no_relevant.rb == 0);
  CHECK(no_relevant.ib == 1);
  CHECK(no_relevant.nb == 0);
  CHECK(no_relevant.precision == 0.0);
  CHECK(no_relevant.recall == 0.0);
  CHECK(no_relevant.f_measure == 0.0);
}

TEST_CASE("cutoff truncates before counting") {
  std::set<std::string> relevant = {"B1", "B9"};
  auto top1 = evaluate_run({"B1", "B2", "B9"}, relevant, 1);
  CHECK(top1.rb == 1);
  CHECK(top1.ib == 0);
  CHECK(top1.nb == 1);

  auto top2 = evaluate_run({"B1", "B2", "B9"}, relevant, 2);
  CHECK(top2.rb == 1);
  CHECK(top2.ib == 1);

  auto beyond = evaluate_run({"B1", "B2", "B9"}, relevant, 10);
  CHECK(beyond.rb == 2);
  CHECK(beyond.ib == 1);
}

TEST_CASE("duplicates in the ranking are rejected even beyond the cutoff") {
  CHECK_THROWS_AS(evaluate_run({"B1", "B2", "B1"}, {"B1"}), DuplicateInRankingError);
  CHECK_THROWS_AS(evaluate_run({"B1", "B2", "B2"}, {"B1"}, 1), DuplicateInRankingError);
}

TEST_CASE("metric properties over random triples") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::size_t> count(0, 50);
  for (int i = 0; i < 2000; ++i) {
    std::size_t rb = count(rng), ib = count(rng), nb = count(rng);
    double p = precision(rb, ib);
    double r = recall(rb, nb);
    double f = f_measure(p, r);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    if (p > 0.0 && r > 0.0) {
      CHECK(f >= std::min(p, r) - 1e-12);
      CHECK(f <= std::max(p, r) + 1e-12);
    } else {
      CHECK(f == 0.0);
    }
  }
}

TEST_CASE("order beyond the cutoff boundary does not matter") {
  std::set<std::string> relevant = {"B2", "B4"};
  auto a = evaluate_run({"B1", "B2", "B3", "B4"}, relevant, 2);
  auto b = evaluate_run({"B1", "B2", "B4", "B3"}, relevant, 2);
  CHECK(a.rb == b.rb);
  CHECK(a.ib == b.ib);
  CHECK(a.nb == b.nb);
}

TEST_CASE("judgments csv loads per-query sets") {
  auto path = std::filesystem::temp_directory_path() / "judgments_test.csv";
  {
    std::ofstream out(path);
    out << "query_id,relevant_id\n"
        << "q1,B4\n"
        << "q1,B5\n"
        << "q2,B1\n";
  }
  auto judgments = load_judgments_csv(path);
  REQUIRE(judgments.relevant.size() == 2);
  CHECK(judgments.relevant.at("q1") == std::set<std::string>{"B4", "B5"});
  CHECK(judgments.relevant.at("q2") == std::set<std::string>{"B1"});
  std::filesystem::remove(path);
}

TEST_CASE("run csv keeps rank order within each query") {
  auto path = std::filesystem::temp_directory_path() / "run_test.csv";
  {
    std::ofstream out(path);
    out << "query_id,summary_id\n"
        << "q1,B4\n"
        << "q1,B1\n"
        << "q2,B9\n"
        << "q1,B5\n";
  }
  auto runs = load_run_csv(path);
  REQUIRE(runs.size() == 2);
  CHECK(runs[0].query_id == "q1");
  CHECK(runs[0].ranked_ids == std::vector<std::string>{"B4", "B1", "B5"});
  CHECK(runs[1].query_id == "q2");
  CHECK(runs[1].ranked_ids == std::vector<std::string>{"B9"});
  std::filesystem::remove(path);
}

TEST_CASE("malformed csv rows carry their line number") {
  auto path = std::filesystem::temp_directory_path() / "run_bad.csv";
  {
    std::ofstream out(path);
    out << "query_id,summary_id\n"
        << "q1\n";
  }
  try {
    load_run_csv(path);
    FAIL("expected MalformedRowError");
  } catch (const MalformedRowError& e) {
    CHECK(e.line() == 2);
  }
  std::filesystem::remove(path);
}

TEST_CASE("batch evaluation macro-averages across queries") {
  Judgments judgments;
  judgments.relevant["q1"] = {"B4", "B5"};
  judgments.relevant["q2"] = {"B1"};

  std::vector<QueryRun> runs = {
      {"q1", {"B4", "B1", "B5"}},  // P=2/3, R=1, F=0.8
      {"q2", {"B1"}},              // perfect
  };
  auto report = evaluate_batch(runs, judgments);
  REQUIRE(report.per_query.size() == 2);
  CHECK(report.per_query[0].first == "q1");
  CHECK(report.per_query[1].first == "q2");
  CHECK(report.macro_precision == doctest::Approx((2.0 / 3.0 + 1.0) / 2.0).epsilon(1e-12));
  CHECK(report.macro_recall == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.macro_f_measure == doctest::Approx((0.8 + 1.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("a perfect run scores ones across the board") {
  Judgments judgments;
  judgments.relevant["q1"] = {"B1", "B2"};
  auto report = evaluate_batch({{"q1", {"B2", "B1"}}}, judgments);
  CHECK(report.macro_precision == 1.0);
  CHECK(report.macro_recall == 1.0);
  CHECK(report.macro_f_measure == 1.0);
}

TEST_CASE("judged queries missing from the runs count as empty runs") {
  Judgments judgments;
  judgments.relevant["q1"] = {"B1"};
  judgments.relevant["q2"] = {"B2"};
  auto report = evaluate_batch({{"q1", {"B1"}}}, judgments);
  REQUIRE(report.per_query.size() == 2);
  CHECK(report.per_query[1].first == "q2");
  CHECK(report.per_query[1].second.nb == 1);
  CHECK(report.macro_precision == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("empty batch reports zeros") {
  auto report = evaluate_batch({}, Judgments{});
  CHECK(report.per_query.empty());
  CHECK(report.macro_precision == 0.0);
  CHECK(report.macro_recall == 0.0);
  CHECK(report.macro_f_measure == 0.0);
}

TEST_CASE("plain-text table is aligned and carries the macro row") {
  Judgments judgments;
  judgments.relevant["q1"] = {"B4", "B5"};
  auto report = evaluate_batch({{"q1", {"B4", "B1", "B5"}}}, judgments);
  auto table = format_batch_table(report);

  CHECK(table.find("query") != std::string::npos);
  CHECK(table.find("precision") != std::string::npos);
  CHECK(table.find("q1") != std::string::npos);
  CHECK(table.find("macro") != std::string::npos);
  CHECK(table.find("0.6667") != std::string::npos);
  CHECK(table.find("1.0000") != std::string::npos);
  CHECK(table.find("0.8000") != std::string::npos);
  CHECK(std::count(table.begin(), table.end(), '\n') == 3);  // header, q1, macro
}

TEST_CASE("json report carries full precision per query and macro") {
  Judgments judgments;
  judgments.relevant["q1"] = {"B4", "B5"};
  auto report = evaluate_batch({{"q1", {"B4", "B1", "B5"}}}, judgments);
  auto json_text = batch_report_to_json(report);

  CHECK(json_text.find("\"query_id\": \"q1\"") != std::string::npos);
  CHECK(json_text.find("\"rb\": 2") != std::string::npos);
  CHECK(json_text.find("0.6666666666666666") != std::string::npos);
  CHECK(json_text.find("\"macro\"") != std::string::npos);
}
