// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Run via ctest or directly; takes no arguments.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "alg_oracle.hpp"
#include "rwm/iwt.hpp"
#include "rwm/keyfile.hpp"
#include "rwm/metrics.hpp"
#include "rwm/pipeline.hpp"
#include "rwm/wm_core.hpp"
#include "testutil.hpp"

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw check_failure(msg);
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

// Shared across criteria 1 and 7: every embed run feeds the tracker and
// key-file accounting.
struct RunStats {
    std::size_t runs = 0;
    std::size_t tracker_ok = 0;
    std::size_t keys_checked = 0;
    int max_pixel_diff = 0;
};

RunStats stats;

void run_round_trip(const rwm::GrayImage& cover,
                    const std::vector<std::uint8_t>& bits) {
    const rwm::EmbedOutput out =
        rwm::embed_bits(cover, bits, static_cast<int>(bits.size()), 1);

    ++stats.runs;
    if (out.side.tracker.size() == bits.size()) ++stats.tracker_ok;
    for (std::size_t i = 0; i < cover.data.size(); ++i) {
        const int d = std::abs(int(out.watermarked.data[i]) - int(cover.data[i]));
        stats.max_pixel_diff = std::max(stats.max_pixel_diff, d);
    }

    if (stats.runs % 50 == 0) {
        const rwm::SideInfo side = rwm::decode_key(rwm::encode_key(out.side));
        require(side == out.side, "key file round trip changed side info");
        require(rwm::encode_key(side) == rwm::encode_key(out.side),
                "key re-encoding is not canonical");
        ++stats.keys_checked;
    }

    const rwm::ExtractOutput back = rwm::extract_image(out.watermarked, out.side);
    require(back.recovered == cover, "recovered cover differs");
    require(back.logo.data == bits, "extracted payload differs");
}

std::string criterion_reversibility() {
    const double levels[] = {0.1, 0.5, 1.0, 1.5};
    std::mt19937_64 rng(1001);

    std::vector<rwm::GrayImage> covers;
    for (int i = 0; i < 100; ++i) {
        covers.push_back(testutil::rand_image(rng, 64, 64));
    }
    const rwm::GrayImage natural = testutil::natural_image(512, 512);
    for (int i = 0; i < 12; ++i) {
        const int r0 = static_cast<int>(rng() % (512 - 64));
        const int c0 = static_cast<int>(rng() % (512 - 64));
        covers.push_back(testutil::crop(natural, r0, c0, 64, 64));
    }

    const std::size_t before = stats.runs;
    for (const rwm::GrayImage& cover : covers) {
        for (const double bpp : levels) {
            const auto payload = static_cast<std::uint64_t>(bpp * 64 * 64);
            run_round_trip(cover, testutil::rand_bits(rng, payload));
        }
    }
    const std::size_t runs = stats.runs - before;
    return fmt("%zu covers x 4 levels, %zu/%zu exact, max pixel delta %d",
               covers.size(), runs, runs, stats.max_pixel_diff);
}

std::string criterion_capacity() {
    require(rwm::build_plan(512, 512, 393216).size() == 393216,
            "393216 bits were not accepted");
    require(rwm::max_capacity_bits(512, 512) == 393216, "capacity is not 393216");
    try {
        rwm::build_plan(512, 512, 393217);
        require(false, "393217 bits were accepted");
    } catch (const rwm::capacity_error& e) {
        require(e.max_bits == 393216, "reported maximum is wrong");
    }
    return "512x512 accepts 393216 bits, rejects 393217";
}

std::string criterion_state_machine() {
    std::size_t cases = 0;
    for (std::int32_t c = -1000; c <= 1000; ++c) {
        for (int a = 0; a <= 1; ++a) {
            for (int b = 0; b <= 1; ++b) {
                const rwm::PairResult got = rwm::embed_pair(c, a, b);
                const alg_oracle::PairEmbedded want =
                    alg_oracle::embed_pair(c, a, b);
                require(got.coeff == want.coeff &&
                            got.tkey_first == want.tkey_first &&
                            got.tkey_second == want.tkey_second,
                        fmt("oracle mismatch at c=%d a=%d b=%d", c, a, b));

                const rwm::ExtractResult xb =
                    rwm::extract_bit(got.coeff, got.tkey_second, 2);
                const rwm::ExtractResult xa =
                    rwm::extract_bit(xb.coeff, got.tkey_first, 1);
                require(xb.bit == b && xa.bit == a && xa.coeff == c,
                        fmt("inversion failed at c=%d a=%d b=%d", c, a, b));
                ++cases;
            }
        }
    }
    return fmt("%zu exhaustive cases match the transcription oracle", cases);
}

std::string criterion_iwt_reconstruction() {
    std::mt19937_64 rng(4004);
    std::uniform_int_distribution<std::int32_t> value(-100000, 100000);
    std::uniform_int_distribution<int> half(1, 16);
    for (int trial = 0; trial < 10000; ++trial) {
        rwm::IntPlane p(2 * half(rng), 2 * half(rng));
        for (auto& v : p.data) v = value(rng);
        require(rwm::inverse_iwt(rwm::forward_iwt(p)) == p,
                fmt("reconstruction failed on trial %d", trial));
    }
    return "10000 random matrices reconstruct exactly";
}

std::string criterion_psnr_bounds() {
    const rwm::GrayImage cover = testutil::natural_image(512, 512);
    const std::vector<double> grid = {0.1, 0.2, 0.3, 0.7, 1.0, 1.3, 1.4, 1.5};
    const auto rows = rwm::sweep(cover, grid, 2024);

    require(rows.front().psnr_db >= 55.0,
            fmt("psnr %.2f dB at 0.1 bpp below 55", rows.front().psnr_db));
    require(rows.back().psnr_db >= 42.0,
            fmt("psnr %.2f dB at 1.5 bpp below 42", rows.back().psnr_db));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        require(rows[i].psnr_db <= rows[i - 1].psnr_db + 1.0,
                fmt("psnr rose by more than 1 dB between %.2f and %.2f bpp",
                    rows[i - 1].bpp, rows[i].bpp));
        require(rows[i].round_trip_ok, "sweep row without verified round trip");
    }
    return fmt("psnr %.2f dB at 0.1 bpp, %.2f dB at 1.5 bpp, trend holds",
               rows.front().psnr_db, rows.back().psnr_db);
}

std::string criterion_compensation() {
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<std::int32_t> value(-100000, 100000);
    const std::size_t trials = 1200000;
    std::size_t zero_net = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::int32_t c = value(rng);
        const int a = static_cast<int>(rng() & 1);
        const int b = static_cast<int>(rng() & 1);
        const std::int32_t net = rwm::embed_pair(c, a, b).coeff - c;
        require(net == -2 || net == 0 || net == 2,
                fmt("net change %d outside {-2,0,+2}", net));
        if (net == 0) ++zero_net;
    }
    const double fraction = double(zero_net) / double(trials);
    require(std::abs(fraction - 0.5) <= 0.01,
            fmt("zero-net fraction %.4f outside 0.5 +/- 0.01", fraction));
    return fmt("%zu trials, zero-net fraction %.4f, net always in {-2,0,+2}",
               trials, fraction);
}

std::string criterion_side_info() {
    require(stats.runs > 0, "no embed runs recorded");
    require(stats.tracker_ok == stats.runs,
            fmt("tracker length mismatched in %zu of %zu runs",
                stats.runs - stats.tracker_ok, stats.runs));

    // One ledger-bearing key on top of the clean ones sampled earlier.
    const rwm::GrayImage cover = testutil::checkerboard(32, 32);
    const auto bits = rwm::random_bits(1536, 77);
    const rwm::EmbedOutput out = rwm::embed_bits(cover, bits, 1536, 1);
    require(!out.side.ledger.empty(), "expected a ledger-bearing key");
    require(rwm::decode_key(rwm::encode_key(out.side)) == out.side,
            "ledger-bearing key did not round trip");

    return fmt("tracker length == payload length in %zu/%zu runs, "
               "%zu keys round-tripped",
               stats.tracker_ok, stats.runs, stats.keys_checked + 1);
}

std::string criterion_overflow_stress() {
    const rwm::GrayImage cover = testutil::checkerboard(512, 512);
    const auto bits = rwm::random_bits(393216, 88);
    const rwm::EmbedOutput out = rwm::embed_bits(cover, bits, 393216, 1);
    require(!out.side.ledger.empty(), "checkerboard produced an empty ledger");

    const rwm::ExtractOutput back = rwm::extract_image(out.watermarked, out.side);
    require(back.recovered == cover, "checkerboard cover not recovered");
    require(back.logo.data == bits, "checkerboard payload not recovered");
    return fmt("1.5 bpp on 0/255 checkerboard: %zu ledger entries, exact recovery",
               out.side.ledger.size());
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const Criterion criteria[] = {
        {"reversibility", criterion_reversibility},
        {"maximum capacity", criterion_capacity},
        {"state machine vs oracle", criterion_state_machine},
        {"iwt perfect reconstruction", criterion_iwt_reconstruction},
        {"psnr reference bounds", criterion_psnr_bounds},
        {"compensation effectiveness", criterion_compensation},
        {"side-information accounting", criterion_side_info},
        {"overflow stress", criterion_overflow_stress},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        try {
            const std::string detail = c.run();
            std::printf("[PASS] %d. %s: %s\n", index, c.name, detail.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] %d. %s: %s\n", index, c.name, e.what());
        }
    }
    if (failures > 0) {
        std::printf("%d of 8 criteria failed\n", failures);
        return 1;
    }
    std::printf("all 8 criteria passed\n");
    return 0;
}
