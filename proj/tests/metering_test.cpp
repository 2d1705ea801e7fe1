#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>

#include "amqft/metering.hpp"

using namespace amqft;

TEST_CASE("predicted costs: pinned values") {
  CHECK(predicted_cost(TransformKind::Cdft, 4) == CostModel{16, 0, 0});
  CHECK(predicted_cost(TransformKind::Cdft, 16) == CostModel{148, 20, 4});
  CHECK(predicted_cost(TransformKind::Cdft, 2048) ==
        CostModel{61444, 16388, 2008});
  CHECK(predicted_cost(TransformKind::Rdft, 4) == CostModel{6, 0, 0});
  CHECK(predicted_cost(TransformKind::Rdft, 8) == CostModel{20, 2, 0});
  CHECK(predicted_cost(TransformKind::Rdft, 16) == CostModel{60, 10, 2});
  CHECK(predicted_cost(TransformKind::Dct, 8) == CostModel{10, 1, 0});
  CHECK(predicted_cost(TransformKind::Dct, 16) == CostModel{27, 5, 1});
  CHECK(predicted_cost(TransformKind::Dst, 8) == CostModel{4, 1, 0});
  CHECK(predicted_cost(TransformKind::Dst, 16) == CostModel{19, 5, 1});

  CHECK_THROWS_AS(predicted_cost(TransformKind::Cdft, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(predicted_cost(TransformKind::Cdft, 12),
                  std::invalid_argument);
  CHECK_THROWS_AS(predicted_cost(TransformKind::Cdft, 0),
                  std::invalid_argument);
}

TEST_CASE("flop predictors agree with the cost model") {
  for (TransformKind kind : {TransformKind::Cdft, TransformKind::Rdft,
                             TransformKind::Dct, TransformKind::Dst}) {
    for (std::size_t n = 4; n <= 2048; n *= 2) {
      const CostModel cost = predicted_cost(kind, n);
      CHECK(predicted_flops(kind, n, FlopCase::A) == cost.flops_case_a());
      CHECK(predicted_flops(kind, n, FlopCase::B) == cost.flops_case_b());
    }
  }
  CHECK(predicted_flops(TransformKind::Cdft, 8, FlopCase::A) == 56);
  CHECK(predicted_flops(TransformKind::Cdft, 8, FlopCase::B) == 56);
  CHECK(predicted_flops(TransformKind::Cdft, 16, FlopCase::A) == 168);
  CHECK(predicted_flops(TransformKind::Cdft, 16, FlopCase::B) == 172);
}

TEST_CASE("published complex-transform record matches the predictors") {
  for (std::size_t n = 4; n <= 2048; n *= 2) {
    const PublishedCdftCounts rec = published_cdft_counts(n);
    const CostModel cost = predicted_cost(TransformKind::Cdft, n);
    CHECK(rec.adds == cost.adds);
    CHECK(rec.muls == cost.muls);
    CHECK(rec.flops_case_a == cost.flops_case_a());
    CHECK(rec.flops_case_b == cost.flops_case_b());
  }
  const PublishedCdftCounts r2048 = published_cdft_counts(2048);
  CHECK(r2048.adds == 61444);
  CHECK(r2048.muls == 16388);
  CHECK(r2048.flops_case_a == 77832);
  CHECK(r2048.flops_case_b == 79840);
  CHECK_THROWS_AS(published_cdft_counts(4096), std::invalid_argument);
}

TEST_CASE("competing algorithms: pinned published counts") {
  CHECK(std::string(reference_algorithm_name(
            ReferenceAlgorithm::SplitRadix42)) == "SR_4/2");
  CHECK(std::string(reference_algorithm_name(
            ReferenceAlgorithm::SplitRadix33)) == "SR_3/3");
  CHECK(std::string(reference_algorithm_name(
            ReferenceAlgorithm::JohnsonFrigo)) == "JF");
  CHECK(std::string(reference_algorithm_name(
            ReferenceAlgorithm::ClassicalQft)) == "clas_QFT");

  const LiteratureCounts sr42 =
      reference_literature_counts(ReferenceAlgorithm::SplitRadix42, 32);
  CHECK(sr42.adds == 372);
  CHECK(sr42.muls == 84);

  // The 3/3 split-radix record shares the flop column with no one: it is
  // not published, and its adds column carries one historical irregularity.
  const LiteratureCounts sr33 =
      reference_literature_counts(ReferenceAlgorithm::SplitRadix33, 512);
  CHECK(sr33.adds == 12290);
  CHECK(!sr33.flops.has_value());
  CHECK(reference_literature_counts(ReferenceAlgorithm::SplitRadix33, 256)
            .adds == 5380);

  const LiteratureCounts jf =
      reference_literature_counts(ReferenceAlgorithm::JohnsonFrigo, 1024);
  CHECK(jf.flops == 33968);
  CHECK(jf.adds == 25488);
  CHECK(jf.muls == 8480);

  const LiteratureCounts cq =
      reference_literature_counts(ReferenceAlgorithm::ClassicalQft, 64);
  CHECK(cq.adds == 1088);
  CHECK(cq.muls == 210);
  CHECK(cq.flops == 1298);

  CHECK_THROWS_AS(
      reference_literature_counts(ReferenceAlgorithm::SplitRadix42, 4096),
      std::invalid_argument);
  CHECK_THROWS_AS(
      reference_literature_counts(ReferenceAlgorithm::SplitRadix42, 2),
      std::invalid_argument);
}

TEST_CASE("measured counts: pinned values and seed independence") {
  CHECK(measure(VariantId::V1, TransformKind::Cdft, 16) == OpMeter{148, 20, 4});
  CHECK(measure(VariantId::V4, TransformKind::Cdft, 16) == OpMeter{148, 20, 0});
  CHECK(measure(VariantId::V1, TransformKind::Dst, 16) == OpMeter{19, 5, 1});
  CHECK(measure(VariantId::V6, TransformKind::Dct, 64) ==
        OpMeter{185, 49, 0});

  CHECK(measure(VariantId::V3, TransformKind::Rdft, 64, 7) ==
        measure(VariantId::V3, TransformKind::Rdft, 64, 12345));
}

TEST_CASE("measured counts match the closed forms everywhere") {
  for (VariantId v : kAllVariants) {
    for (TransformKind kind : {TransformKind::Cdft, TransformKind::Rdft,
                               TransformKind::Dct, TransformKind::Dst}) {
      for (std::size_t n = 4; n <= 256; n *= 2) {
        const CostModel want = predicted_cost(kind, n);
        const OpMeter got = measure(v, kind, n);
        INFO("variant " << variant_number(v) << " " << kind_name(kind)
                        << " at n=" << n);
        CHECK(static_cast<std::int64_t>(got.adds) == want.adds);
        CHECK(static_cast<std::int64_t>(got.muls) == want.muls);
        const std::int64_t want_bt =
            uses_binary_translations(v) ? want.binary_translations : 0;
        CHECK(static_cast<std::int64_t>(got.binary_translations) == want_bt);
      }
    }
  }
}
