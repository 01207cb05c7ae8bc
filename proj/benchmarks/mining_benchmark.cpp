#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "rulehide/basket_io.hpp"
#include "rulehide/effects.hpp"

namespace {

using namespace rulehide;

TransactionDB synthetic_db(int transactions, int items, unsigned seed) {
    static const char* kNames[] = {"milk",   "bread", "eggs",  "butter",
                                   "coffee", "tea",   "sugar", "flour",
                                   "jam",    "rice",  "salt",  "beer"};
    std::mt19937 rng(seed);
    std::bernoulli_distribution pick(0.35);
    std::vector<Transaction> rows;
    for (int t = 1; t <= transactions; ++t) {
        std::vector<Item> chosen;
        for (int i = 0; i < items; ++i) {
            if (pick(rng)) chosen.emplace_back(kNames[i]);
        }
        if (chosen.empty()) chosen.emplace_back(kNames[t % items]);
        rows.push_back({t, Itemset(std::move(chosen))});
    }
    return TransactionDB(std::move(rows));
}

Thresholds bench_thresholds() {
    return Thresholds(Rational(1, 10), Rational(1, 2));
}

void BM_ParseSerialize(benchmark::State& state) {
    std::string text =
        serialize_database(synthetic_db(static_cast<int>(state.range(0)), 10, 42));
    for (auto _ : state) {
        TransactionDB db = parse_database(text);
        benchmark::DoNotOptimize(serialize_database(db));
    }
}
BENCHMARK(BM_ParseSerialize)->Arg(100)->Arg(1000);

void BM_FrequentItemsets(benchmark::State& state) {
    TransactionDB db = synthetic_db(static_cast<int>(state.range(0)), 10, 42);
    Thresholds th = bench_thresholds();
    for (auto _ : state) {
        ScanCounter scans;
        benchmark::DoNotOptimize(frequent_itemsets(db, th, scans));
    }
}
BENCHMARK(BM_FrequentItemsets)->Arg(100)->Arg(1000);

void BM_StrongRules(benchmark::State& state) {
    TransactionDB db = synthetic_db(static_cast<int>(state.range(0)), 10, 42);
    Thresholds th = bench_thresholds();
    for (auto _ : state) {
        benchmark::DoNotOptimize(strong_rules(db, th));
    }
}
BENCHMARK(BM_StrongRules)->Arg(100)->Arg(1000);

void BM_RepresentativeSet(benchmark::State& state) {
    TransactionDB db = synthetic_db(200, 10, 42);
    RuleSet ar = strong_rules(db, bench_thresholds());
    for (auto _ : state) {
        benchmark::DoNotOptimize(representative_set(ar));
    }
}
BENCHMARK(BM_RepresentativeSet);

void BM_HideAll(benchmark::State& state) {
    TransactionDB db = synthetic_db(static_cast<int>(state.range(0)), 10, 42);
    Thresholds th = bench_thresholds();
    std::vector<Item> sensitive{Item("milk")};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hide_all(db, th, sensitive));
    }
}
BENCHMARK(BM_HideAll)->Arg(100)->Arg(400);

void BM_Analyze(benchmark::State& state) {
    TransactionDB db = synthetic_db(400, 10, 42);
    Thresholds th = bench_thresholds();
    std::vector<Item> sensitive{Item("milk")};
    SanitizationResult result = hide_all(db, th, sensitive);
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze(db, result, th, sensitive));
    }
}
BENCHMARK(BM_Analyze);

}  // namespace

BENCHMARK_MAIN();
