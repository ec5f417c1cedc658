// deckrec: command line frontend for the deck + trace reconstruction library.
//
// Exit codes: 0 success, 2 bad input (flags, files, argument domains),
// 3 inconsistent input (a deck and trace that cannot belong to one word),
// 4 refused resource cap. verify-paper exits 1 if any golden item fails.

#include "deckrec/balls.hpp"
#include "deckrec/channel.hpp"
#include "deckrec/deck.hpp"
#include "deckrec/errors.hpp"
#include "deckrec/io.hpp"
#include "deckrec/multitrace.hpp"
#include "deckrec/reconstruct.hpp"
#include "deckrec/search.hpp"
#include "deckrec/sequence.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace deckrec;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << text;
}

// The exhaustive searches refuse large n unless DECKREC_MAX_N raises the
// cap; when it does, say up front roughly what the scan will cost.
SearchOptions search_opts(int n, int default_cap, int workers) {
    SearchOptions opts;
    opts.workers = workers;
    if (n <= default_cap) return opts;
    const char* env = std::getenv("DECKREC_MAX_N");
    if (env == nullptr) return opts;
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n > cap) return opts;
    opts.override_cap = true;
    const double mib =
        static_cast<double>(search_memory_estimate(n)) / (1024.0 * 1024.0);
    std::cerr << "cap raised via DECKREC_MAX_N: n=" << n << ", estimated peak memory "
              << std::fixed << std::setprecision(1) << mib << " MiB\n";
    return opts;
}

// ---------------------------------------------------------------------------
// verify-paper: fixed worked examples with known answers, checked end to end.

int run_verify_paper() {
    int failures = 0;
    const auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            std::cout << "[PASS] " << name << "\n";
        } else {
            std::cout << "[FAIL] " << name << (detail.empty() ? "" : ": " + detail) << "\n";
            ++failures;
        }
    };

    // zero-run profiles and position bookkeeping
    {
        check("profile of 0110 is (1,0,1)",
              to_profile(BinarySequence::parse("0110")).runs() == std::vector<int>({1, 0, 1}));
        check("profile of 10110010 is (0,1,0,2,1)",
              to_profile(BinarySequence::parse("10110010")).runs() ==
                  std::vector<int>({0, 1, 0, 2, 1}));
        check("profile (2,0,1,0) rebuilds 001101",
              from_profile(ZeroRunProfile({2, 0, 1, 0})).str() == "001101");
        const auto w = BinarySequence::parse("00010");
        check("ones before position 2 of 00010 is 0", ones_before(w, 2) == 0);
        check("ones before position 5 of 00010 is 1", ones_before(w, 5) == 1);
        check("deleting positions {1,3} from 00010 gives 010",
              delete_zeros(w, DeletedPositionSet({1, 3})).str() == "010");
    }

    // single deletion: 2-deck and checksum decoders on x = 1110
    {
        const auto x = BinarySequence::parse("1110");
        const auto trace = BinarySequence::parse("111");
        const auto deck = compute_deck(x, 2);
        check("2-deck of 1110 is {11:3, 10:3}",
              deck.count(BinarySequence::parse("11")) == 3 &&
                  deck.count(BinarySequence::parse("10")) == 3 &&
                  deck.count(BinarySequence::parse("01")) == 0 &&
                  deck.count(BinarySequence::parse("00")) == 0);
        check("2-deck decode of 111 returns 1110",
              reconstruct_single_trace(trace, deck, 4) == x);
        const auto sum = vt_checksum(x);
        check("checksum of 1110 is 1 mod 5", sum.residue == 1 && sum.modulus == 5);
        check("checksum decode of 111 returns 1110",
              vt_decode_zero_deletion(trace, sum, 4) == x);
    }

    // insertion balls
    {
        const auto ball = insertion_ball(BinarySequence::parse("01"), 1);
        check("one insertion into 01 gives {001, 010}",
              ball.size() == 2 && ball[0].str() == "001" && ball[1].str() == "010");
    }

    // aggregation of two traces and the residual single-deletion decode
    {
        const auto x = BinarySequence::parse("10110010");
        const TraceSet ts({BinarySequence::parse("111010"), BinarySequence::parse("101101")});
        const auto agg = aggregate(ts);
        check("traces 111010 and 101101 aggregate to 1011010", agg.str() == "1011010");
        check("aggregate sits one deletion from the source", profile_hamming(x, agg) == 1);
        const auto deck = compute_deck(x, 2);
        const auto deltas = deck_trace_moments(deck, agg, 8);
        check("pattern gap n_10 is 11 - 8 = 3",
              deltas.size() == 1 && deltas[0] == 3 &&
                  subsequence_count(x, BinarySequence::parse("10")) == 11 &&
                  subsequence_count(agg, BinarySequence::parse("10")) == 8);
        check("2-deck plus both traces returns 10110010",
              reconstruct_multi(ts, deck, 8) == x);
    }

    // pooled-trace minimality on profiles
    {
        const auto x = BinarySequence::parse("01101");
        const auto y = BinarySequence::parse("00111");
        const TraceSet ts({x, y});
        check("aggregate of 01101 and 00111 is 001101",
              aggregate(ts).str() == "001101");
        check("pooled profile is the pointwise max (2,0,1,0)",
              to_profile(aggregate(ts)).runs() == std::vector<int>({2, 0, 1, 0}));
    }

    // the pair defeating the 3-deck at n = 8
    {
        const auto x = BinarySequence::parse("01101001");
        const auto y = BinarySequence::parse("10010110");
        check("01101001 and 10010110 share their 3-deck",
              deck_fingerprint(x, 3) == deck_fingerprint(y, 3));
        check("they are told apart by the 4-deck",
              deck_fingerprint(x, 4) != deck_fingerprint(y, 4));
        check("they share a supersequence of length 11", common_supersequence_exists(x, y, 3));
        check("they share a trace of length 5",
              common_trace_exists(x, y, 3) && common_trace_count(x, y, 3) == 1);
    }

    // the pair defeating the 4-deck at n = 13
    {
        const auto x = BinarySequence::parse("1100111011001");
        const auto y = BinarySequence::parse("1011101001110");
        check("the length-13 pair shares its 4-deck",
              deck_fingerprint(x, 4) == deck_fingerprint(y, 4));
        check("the length-13 pair shares a length-9 trace",
              common_trace_count(x, y, 4) >= 1);
    }

    // three shared traces behind an alternating tail
    {
        const auto w = multitrace_witness(BinarySequence::parse("0110"),
                                          BinarySequence::parse("1001"),
                                          BinarySequence::parse("11"), 3, TailParity::Even);
        check("tail construction yields x = 0110010101", w.x.str() == "0110010101");
        check("tail construction yields y = 1001010101", w.y.str() == "1001010101");
        check("the three traces are 1110101, 1101101, 1101011",
              w.traces.size() == 3 && w.traces[0].str() == "1110101" &&
                  w.traces[1].str() == "1101101" && w.traces[2].str() == "1101011");
        check("x and y share their 2-deck", deck_fingerprint(w.x, 2) == deck_fingerprint(w.y, 2));
        bool member = true;
        for (const auto& tr : w.traces) {
            const auto xr = to_profile(w.x).runs();
            const auto yr = to_profile(w.y).runs();
            const auto rr = to_profile(tr).runs();
            for (std::size_t i = 0; i < rr.size(); ++i)
                if (rr[i] > xr[i] || rr[i] > yr[i]) member = false;
            if (tr.weight() != w.x.weight()) member = false;
        }
        check("every trace embeds in both x and y", member);
    }

    std::cout << (failures == 0 ? "all golden items passed\n"
                                : std::to_string(failures) + " golden item(s) failed\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deck + trace reconstruction toolkit"};
    app.require_subcommand(1);
    int workers = 0;
    app.add_option("--workers", workers, "worker threads for searches (0 = all available)");

    int exit_code = 0;

    // deck --seq BITS --k K [--out FILE]
    {
        auto* cmd = app.add_subcommand("deck", "compute the k-deck of a word");
        auto seq = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--seq", *seq, "binary word")->required();
        cmd->add_option("--k", *k, "deck order")->required();
        cmd->add_option("--out", *out, "write JSON here instead of stdout");
        cmd->callback([seq, k, out] {
            const auto d = compute_deck(BinarySequence::parse(*seq), *k);
            emit(deck_to_json(d).dump(2) + "\n", *out);
        });
    }

    // reconstruct (--trace BITS | --traces FILE) --deck FILE --n N
    {
        auto* cmd = app.add_subcommand("reconstruct", "decode a word from a deck plus traces");
        auto trace = std::make_shared<std::string>();
        auto traces_path = std::make_shared<std::string>();
        auto deck_path = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto trace_opt = cmd->add_option("--trace", *trace, "single trace");
        auto traces_opt =
            cmd->add_option("--traces", *traces_path, "file with one trace per line");
        trace_opt->excludes(traces_opt);
        cmd->add_option("--deck", *deck_path, "deck JSON file")->required();
        cmd->add_option("--n", *n, "length of the original word")->required();
        cmd->callback([trace, traces_path, deck_path, n] {
            const auto deck = deck_from_json(Json::parse(slurp(*deck_path)));
            BinarySequence result = [&] {
                if (!trace->empty())
                    return reconstruct_single_trace(BinarySequence::parse(*trace), deck, *n);
                if (traces_path->empty())
                    throw std::invalid_argument("need --trace or --traces");
                return reconstruct_multi(TraceSet(parse_trace_lines(slurp(*traces_path))),
                                         deck, *n);
            }();
            std::cout << result.str() << "\n";
        });
    }

    // aggregate --traces FILE [--json]
    {
        auto* cmd = app.add_subcommand("aggregate", "pool traces into their minimal common supersequence");
        auto traces_path = std::make_shared<std::string>();
        auto as_json = std::make_shared<bool>(false);
        cmd->add_option("--traces", *traces_path, "file with one trace per line")->required();
        cmd->add_flag("--json", *as_json, "emit JSON with the residual deletion count");
        cmd->callback([traces_path, as_json] {
            const TraceSet ts(parse_trace_lines(slurp(*traces_path)));
            const auto agg = aggregate(ts);
            if (*as_json) {
                Json j;
                j["aggregate"] = agg.str();
                j["level"] = minimal_common_supersequence_level(ts);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << agg.str() << "\n";
            }
        });
    }

    // balls --seq BITS --t T [--direction deletion|insertion] [--list]
    // balls --max-check --n N --t T
    {
        auto* cmd = app.add_subcommand("balls", "deletion/insertion ball sizes and extremal scan");
        auto seq = std::make_shared<std::string>();
        auto t = std::make_shared<int>(0);
        auto n = std::make_shared<int>(0);
        auto direction = std::make_shared<std::string>("deletion");
        auto list = std::make_shared<bool>(false);
        auto max_check = std::make_shared<bool>(false);
        cmd->add_option("--seq", *seq, "center word");
        cmd->add_option("--t", *t, "radius")->required();
        cmd->add_option("--n", *n, "word length for --max-check");
        cmd->add_option("--direction", *direction, "deletion or insertion")
            ->check(CLI::IsMember({"deletion", "insertion"}));
        cmd->add_flag("--list", *list, "list ball members instead of counting");
        cmd->add_flag("--max-check", *max_check, "scan all words of length --n for the largest ball");
        cmd->callback([seq, t, n, direction, list, max_check, &workers] {
            if (*max_check) {
                if (*n <= 0) throw std::invalid_argument("--max-check needs --n");
                const auto report = max_ball_bound_check(*n, *t, workers);
                std::cout << max_ball_report_to_json(report).dump(2) << "\n";
                return;
            }
            if (seq->empty()) throw std::invalid_argument("need --seq or --max-check");
            const auto x = BinarySequence::parse(*seq);
            const bool deletion = (*direction == "deletion");
            if (*list) {
                const auto members = deletion ? deletion_ball(x, *t) : insertion_ball(x, *t);
                for (const auto& w : members) std::cout << w.str() << "\n";
            } else {
                const auto size = deletion ? deletion_ball_size(x, *t) : insertion_ball_size(x, *t);
                std::cout << bigint_to_string(size) << "\n";
            }
        });
    }

    // ftable --n-min A --n-max B --t-min C --t-max D [--m M] [--format csv|json]
    {
        auto* cmd = app.add_subcommand("ftable", "tabulate minimal sufficient deck orders");
        auto n_min = std::make_shared<int>(0);
        auto n_max = std::make_shared<int>(0);
        auto t_min = std::make_shared<int>(1);
        auto t_max = std::make_shared<int>(1);
        auto m = std::make_shared<std::int64_t>(1);
        auto format = std::make_shared<std::string>("csv");
        cmd->add_option("--n-min", *n_min, "smallest length")->required();
        cmd->add_option("--n-max", *n_max, "largest length")->required();
        cmd->add_option("--t-min", *t_min, "smallest radius");
        cmd->add_option("--t-max", *t_max, "largest radius");
        cmd->add_option("--m", *m, "required common-trace count (default 1)");
        cmd->add_option("--format", *format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([n_min, n_max, t_min, t_max, m, format, &workers] {
            if (*n_min > *n_max || *t_min > *t_max)
                throw std::invalid_argument("empty n or t range");
            const int cap = *m == 1 ? kMaxNSingleTrace : kMaxNMultiTrace;
            const bool csv = (*format == "csv");
            Json rows = Json::array();
            if (csv) std::cout << kCertificateCsvHeader << "\n";
            for (int n = *n_min; n <= *n_max; ++n) {
                for (int t = *t_min; t <= std::min(*t_max, n); ++t) {
                    const auto opts = search_opts(n, cap, workers);
                    const auto cert = *m == 1 ? f_nt(n, t, opts) : f_ntM(n, t, *m, opts);
                    if (csv)
                        std::cout << certificate_to_csv_row(cert) << "\n" << std::flush;
                    else
                        rows.push_back(certificate_to_json(cert));
                }
            }
            if (!csv) std::cout << rows.dump(2) << "\n";
        });
    }

    // witness doubling|morse-thue|multitrace
    {
        auto* cmd = app.add_subcommand("witness", "constructive lower-bound witnesses");
        cmd->require_subcommand(1);

        auto* dbl = cmd->add_subcommand("doubling", "concatenate a pair into the next level");
        auto dx = std::make_shared<std::string>();
        auto dy = std::make_shared<std::string>();
        auto ds = std::make_shared<std::string>();
        dbl->add_option("--x", *dx, "first word")->required();
        dbl->add_option("--y", *dy, "second word")->required();
        dbl->add_option("--shared", *ds, "common trace of both")->required();
        dbl->callback([dx, dy, ds] {
            const auto w = doubling_witness(BinarySequence::parse(*dx),
                                            BinarySequence::parse(*dy),
                                            BinarySequence::parse(*ds));
            Json j;
            j["x"] = w.x.str();
            j["y"] = w.y.str();
            j["shared"] = w.shared.str();
            std::cout << j.dump(2) << "\n";
        });

        auto* mt = cmd->add_subcommand("morse-thue", "level s of the doubling chain");
        auto level = std::make_shared<int>(1);
        mt->add_option("--level", *level, "chain level, words have length 2^level")->required();
        mt->callback([level] {
            const auto w = morse_thue_witness(*level);
            Json j;
            j["x"] = w.x.str();
            j["y"] = w.y.str();
            j["shared"] = w.shared.str();
            std::cout << j.dump(2) << "\n";
        });

        auto* multi = cmd->add_subcommand("multitrace", "append an alternating tail, emit shared traces");
        auto mx = std::make_shared<std::string>();
        auto my = std::make_shared<std::string>();
        auto mshared = std::make_shared<std::string>();
        auto mm = std::make_shared<int>(1);
        auto parity = std::make_shared<std::string>("even");
        multi->add_option("--x", *mx, "first word")->required();
        multi->add_option("--y", *my, "second word")->required();
        multi->add_option("--shared", *mshared, "common trace of both, half their length")->required();
        multi->add_option("--m", *mm, "trace multiplicity target")->required();
        multi->add_option("--parity", *parity, "even or odd tail")
            ->check(CLI::IsMember({"even", "odd"}));
        multi->callback([mx, my, mshared, mm, parity] {
            const auto w = multitrace_witness(BinarySequence::parse(*mx),
                                              BinarySequence::parse(*my),
                                              BinarySequence::parse(*mshared), *mm,
                                              *parity == "even" ? TailParity::Even
                                                                : TailParity::Odd);
            Json j;
            j["x"] = w.x.str();
            j["y"] = w.y.str();
            Json traces = Json::array();
            for (const auto& tr : w.traces) traces.push_back(tr.str());
            j["traces"] = std::move(traces);
            std::cout << j.dump(2) << "\n";
        });
    }

    // simulate --seq BITS --t T --m M --seed S [--distinct]
    {
        auto* cmd = app.add_subcommand("simulate", "sample traces from the zeros-only deletion channel");
        auto seq = std::make_shared<std::string>();
        auto t = std::make_shared<int>(0);
        auto m = std::make_shared<int>(1);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto distinct = std::make_shared<bool>(false);
        cmd->add_option("--seq", *seq, "channel input")->required();
        cmd->add_option("--t", *t, "zeros deleted per trace")->required();
        cmd->add_option("--m", *m, "number of traces")->required();
        cmd->add_option("--seed", *seed, "random seed")->required();
        cmd->add_flag("--distinct", *distinct, "require pairwise distinct traces");
        cmd->callback([seq, t, m, seed, distinct] {
            ChannelSpec spec;
            spec.deletions = *t;
            spec.trace_count = *m;
            spec.seed = *seed;
            spec.distinct = *distinct;
            const auto ts = sample_traces(BinarySequence::parse(*seq), spec);
            std::cout << serialize_traces(ts.traces());
        });
    }

    // verify-paper
    {
        auto* cmd = app.add_subcommand("verify-paper", "run the fixed golden example suite");
        cmd->callback([&exit_code] { exit_code = run_verify_paper(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ReconstructError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ChecksumMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InconsistentDeckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IncompatibleTracesError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
