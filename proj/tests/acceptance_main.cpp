// Acceptance suite: every release gate in one binary, one PASS/FAIL line
// per criterion. Exits non-zero when any criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rulehide/basket_io.hpp"
#include "rulehide/effects.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace rulehide;
using fixtures::db;
using fixtures::iset;
using fixtures::item;
using fixtures::rule;

namespace {

struct Gate {
    int failures = 0;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

int g_failed_criteria = 0;

void criterion(int number, const std::string& label,
               const std::function<void(Gate&)>& body) {
    Gate gate;
    try {
        body(gate);
    } catch (const std::exception& e) {
        gate.require(false, std::string("exception: ") + e.what());
    }
    if (gate.failures == 0) {
        std::cout << "[PASS] " << number << ". " << label << "\n";
    } else {
        ++g_failed_criteria;
        std::cout << "[FAIL] " << number << ". " << label << "\n";
        for (const std::string& note : gate.notes)
            std::cout << "        - " << note << "\n";
    }
}

std::string stats_line(const RuleSet::Entry& e) {
    return e.rule.to_string() + " " + e.stats.support.to_string() + " " +
           e.stats.confidence.to_string();
}

// The nine strong rules of the six-basket fixture with their exact
// statistics, in canonical order.
const std::vector<std::string> kSmallExpected = {
    "B => A 2/3 1/1",     "B => C 1/2 3/4",   "B => A,C 1/2 3/4",
    "C => A 2/3 1/1",     "C => B 1/2 3/4",   "C => A,B 1/2 3/4",
    "A,B => C 1/2 3/4",   "A,C => B 1/2 3/4", "B,C => A 1/2 1/1",
};

// The eight strong rules of the five-item fixture.
const std::vector<std::string> kMixedExpected = {
    "A => B 1/2 3/4", "A => C 1/2 3/4", "B => A 1/2 3/4",   "B => C 1/2 3/4",
    "C => A 1/2 3/4", "C => B 1/2 3/4", "A,D => C 1/3 1/1", "C,D => A 1/3 1/1",
};

void check_rule_list(Gate& gate, const RuleSet& mined,
                     const std::vector<std::string>& expected) {
    gate.require(mined.size() == expected.size(),
                 "expected " + std::to_string(expected.size()) + " rules, mined " +
                     std::to_string(mined.size()));
    for (std::size_t i = 0; i < mined.size() && i < expected.size(); ++i) {
        std::string got = stats_line(mined.entries()[i]);
        gate.require(got == expected[i], "rule " + std::to_string(i) + ": got '" + got +
                                             "', expected '" + expected[i] + "'");
    }
}

struct Scenario {
    std::string_view before;
    std::string_view after;
    const char* sensitive;
    Tid donor;
    Tid recipient;
    int pruned;
};

const std::vector<Scenario> kScenarios = {
    {fixtures::kDbSmall, fixtures::kDbSmallHiddenC, "C", 1, 5, 6},
    {fixtures::kDbSmall, fixtures::kDbSmallHiddenB, "B", 1, 5, 6},
    {fixtures::kDbMixed, fixtures::kDbMixedHiddenC, "C", 2, 5, 6},
    {fixtures::kDbMixed, fixtures::kDbMixedHiddenB, "B", 2, 5, 4},
};

}  // namespace

int main() {
    Thresholds th = fixtures::default_thresholds();

    criterion(1, "six-basket fixture mines exactly its nine rules with exact statistics",
              [&](Gate& gate) {
                  check_rule_list(gate, strong_rules(db(fixtures::kDbSmall), th),
                                  kSmallExpected);
              });

    criterion(2, "five-item fixture mines exactly its eight rules", [&](Gate& gate) {
        check_rule_list(gate, strong_rules(db(fixtures::kDbMixed), th), kMixedExpected);
    });

    criterion(3, "all four sanitizations match their frozen outputs byte for byte",
              [&](Gate& gate) {
                  for (const Scenario& s : kScenarios) {
                      SanitizationResult r = hide_all(db(s.before), th, {item(s.sensitive)});
                      std::string got = serialize_database(r.transformed);
                      gate.require(got == s.after,
                                   std::string("output for ") + s.sensitive + " differs");
                      gate.require(r.moves.size() == 1,
                                   std::string("expected one move for ") + s.sensitive);
                      if (r.moves.size() == 1) {
                          gate.require(r.moves[0].donor_tid == s.donor &&
                                           r.moves[0].recipient_tid == s.recipient,
                                       "move was T" + std::to_string(r.moves[0].donor_tid) +
                                           "->T" + std::to_string(r.moves[0].recipient_tid));
                      }
                  }
              });

    criterion(4, "sensitive-item support and database size are invariant", [&](Gate& gate) {
        for (const Scenario& s : kScenarios) {
            TransactionDB before = db(s.before);
            SanitizationResult r = hide_all(before, th, {item(s.sensitive)});
            Itemset h{item(s.sensitive)};
            int support_before = before.support_count(h);
            int support_after = r.transformed.support_count(h);
            gate.require(support_before == 4 && support_after == 4,
                         std::string("support of ") + s.sensitive + ": " +
                             std::to_string(support_before) + " -> " +
                             std::to_string(support_after));
            gate.require(r.transformed.size() == before.size(), "transaction count changed");
        }
    });

    criterion(5, "pruned-rule counts are 6, 6, 6, 4, with the two stubborn survivors",
              [&](Gate& gate) {
                  for (const Scenario& s : kScenarios) {
                      // Independent route: enumeration oracle on both databases.
                      RuleSet before_rules = oracle::enumerate_strong_rules(db(s.before), th);
                      RuleSet after_rules = oracle::enumerate_strong_rules(db(s.after), th);
                      int pruned = 0;
                      for (const auto& entry : before_rules) {
                          if (entry.rule.mentions(item(s.sensitive)) &&
                              !after_rules.contains(entry.rule))
                              ++pruned;
                      }
                      gate.require(pruned == s.pruned,
                                   std::string("oracle pruned count for ") + s.sensitive +
                                       ": " + std::to_string(pruned) + " != " +
                                       std::to_string(s.pruned));
                      // Library route must agree.
                      SideEffectReport report =
                          analyze(db(s.before), db(s.after), th, {item(s.sensitive)});
                      gate.require(report.rules_pruned() == s.pruned,
                                   "analyze() disagrees with the oracle");
                  }

                  // The six-basket fixture keeps two un-hideable rules: A occurs
                  // everywhere, so C=>A holds at full confidence, and B,C => A
                  // keeps exactly the boundary support.
                  RuleSet after = oracle::enumerate_strong_rules(db(fixtures::kDbSmallHiddenC), th);
                  const RuleStats* ca = after.stats_for(rule("C=>A"));
                  gate.require(ca != nullptr && ca->confidence == Rational(4, 4),
                               "C=>A should survive at confidence 4/4");
                  const RuleStats* bca = after.stats_for(rule("B,C=>A"));
                  gate.require(bca != nullptr && bca->support == Rational(2, 6) &&
                                   bca->confidence == Rational(2, 2),
                               "B,C=>A should survive at support 2/6, confidence 2/2");
              });

    criterion(6, "cover sizes and the representative pair of the nine-rule set",
              [&](Gate& gate) {
                  // Exhaustive over a six-item alphabet: every rule with a
                  // consequent of up to four items obeys |cover| = 3^m - 2^m.
                  static const char* kNames[] = {"A", "B", "C", "D", "E", "F"};
                  int checked = 0;
                  for (int assignment = 0; assignment < 729; ++assignment) {  // 3^6
                      std::vector<Item> lhs, rhs;
                      int rest = assignment;
                      for (const char* name : kNames) {
                          switch (rest % 3) {
                              case 1: lhs.emplace_back(name); break;
                              case 2: rhs.emplace_back(name); break;
                              default: break;
                          }
                          rest /= 3;
                      }
                      if (lhs.empty() || rhs.empty() || rhs.size() > 4) continue;
                      Rule r{Itemset(lhs), Itemset(rhs)};
                      std::size_t m = rhs.size();
                      std::size_t expected = 1, twos = 1;
                      for (std::size_t i = 0; i < m; ++i) {
                          expected *= 3;
                          twos *= 2;
                      }
                      expected -= twos;
                      if (cover(r).members.size() != expected) {
                          gate.require(false, "cover size wrong for " + r.to_string());
                          return;
                      }
                      ++checked;
                  }
                  gate.require(checked > 0, "no rules enumerated");

                  RuleSet ar = strong_rules(db(fixtures::kDbSmall), th);
                  RuleSet rr = representative_set(ar);
                  gate.require(rr.size() == 2 && rr.contains(rule("C=>A,B")) &&
                                   rr.contains(rule("B=>A,C")),
                               "representative set should be {B=>A,C ; C=>A,B}");
                  for (const auto& representative : rr) {
                      for (const auto& other : ar) {
                          if (!(other.rule == representative.rule) &&
                              covers(other.rule, representative.rule))
                              gate.require(false, "representative covered by " +
                                                      other.rule.to_string());
                      }
                  }
                  for (const auto& entry : ar) {
                      bool covered = false;
                      for (const auto& representative : rr)
                          covered = covered || covers(representative.rule, entry.rule);
                      gate.require(covered,
                                   entry.rule.to_string() + " not covered by any representative");
                  }
              });

    criterion(7, "Apriori matches both oracles on 100 random databases", [&](Gate& gate) {
        std::mt19937 rng(1234567);
        for (int round = 0; round < 100; ++round) {
            TransactionDB d = fixtures::random_db(rng);
            Thresholds random_th = fixtures::random_thresholds(rng);
            ScanCounter scans;
            FrequentSet mined = frequent_itemsets(d, random_th, scans);
            if (!(mined == brute_force_frequent(d, random_th))) {
                gate.require(false, "frequent-set mismatch in round " + std::to_string(round));
                return;
            }
            RuleSet generated = generate_rules(mined, d, random_th);
            if (!(generated == oracle::enumerate_strong_rules(d, random_th))) {
                gate.require(false, "rule-set mismatch in round " + std::to_string(round));
                return;
            }
        }
    });

    criterion(8, "sanitization properties hold on 100 random runs", [&](Gate& gate) {
        std::mt19937 rng(89123);
        for (int round = 0; round < 100; ++round) {
            TransactionDB d = fixtures::random_db(rng);
            Thresholds random_th = fixtures::random_thresholds(rng);
            const auto& alphabet = d.alphabet().items();
            std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
            std::vector<Item> sensitive{alphabet[pick(rng)]};

            SanitizationResult result = hide_all(d, random_th, sensitive);

            bool support_ok = result.transformed.support_count(Itemset{sensitive[0]}) ==
                              d.support_count(Itemset{sensitive[0]});
            bool size_ok = result.transformed.size() == d.size() &&
                           result.transformed.item_occurrences() == d.item_occurrences();
            gate.require(support_ok, "support changed in round " + std::to_string(round));
            gate.require(size_ok, "size changed in round " + std::to_string(round));

            // Replay: each move removes exactly one full supporter of its
            // target and never raises the target's confidence.
            TransactionDB current = d;
            for (const Move& move : result.moves) {
                int full_before = current.support_count(move.target.full_itemset);
                TransactionDB next =
                    apply_move(current, move.donor_tid, move.recipient_tid, move.sensitive);
                gate.require(next.support_count(move.target.full_itemset) == full_before - 1,
                             "full-itemset count did not drop by one");
                gate.require(move.conf_after <= move.conf_before,
                             "confidence increased on a move");
                current = next;
            }
            gate.require(current == result.transformed, "move log does not replay");

            SanitizationResult again = hide_all(d, random_th, sensitive);
            gate.require(serialize_database(again.transformed) ==
                             serialize_database(result.transformed),
                         "non-deterministic output");

            SideEffectReport report = analyze(d, result, random_th, sensitive);
            gate.require(report.support_invariant_ok, "analyze flags the support invariant");
            gate.require(report.surviving_sensitive == result.unhidden,
                         "analyze and hide_all disagree on survivors");
            if (gate.failures > 0) return;
        }
    });

    if (g_failed_criteria == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failed_criteria << " criterion(s) FAILED\n";
    return 1;
}
