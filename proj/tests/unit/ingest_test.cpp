#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "citemetrics/error.hpp"
#include "citemetrics/indicators.hpp"
#include "citemetrics/ingest.hpp"
#include "citemetrics/simulate.hpp"

using namespace citemetrics;

namespace {

Corpus parse(const std::string& text) {
  std::istringstream in(text);
  return read_corpus(in, nullptr);
}

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return ParseError("", 0, "", "");
}

}  // namespace

TEST(Identifiers, Alphabet) {
  EXPECT_TRUE(valid_identifier("a-1_B"));
  EXPECT_FALSE(valid_identifier(""));
  EXPECT_FALSE(valid_identifier("a b"));
  EXPECT_FALSE(valid_identifier("a,b"));
  EXPECT_FALSE(valid_identifier("a#1"));
}

TEST(Formatting, RealPrecision) {
  EXPECT_EQ(format_real(std::sqrt(101.0)), "10.0499");
  EXPECT_EQ(format_real(0.0), "0");
  EXPECT_EQ(std::stod(format_exact(0.1)), 0.1);
}

TEST(ReadCorpus, GroupsRowsByAuthor) {
  const auto corpus = parse(
      "author_id,paper_id,citations\n"
      "a,p1,3\nb,p1,0\na,p2,7\n");
  ASSERT_EQ(corpus.size(), 2u);
  EXPECT_EQ(corpus.find("a")->counts(), (std::vector<Citations>{3, 7}));
  EXPECT_EQ(corpus.find("b")->counts(), (std::vector<Citations>{0}));
}

TEST(ReadCorpus, ColumnOrderIsFree) {
  const auto corpus = parse(
      "citations,pub_year,paper_id,field_id,author_id\n"
      "4,2001,p1,f1,a\n");
  const auto& paper = corpus.authors()[0].papers()[0];
  EXPECT_EQ(paper.citations, 4);
  EXPECT_EQ(paper.field_id, "f1");
  EXPECT_EQ(paper.pub_year, 2001);
}

TEST(ReadCorpus, NegativeCountReportsRow) {
  const auto e = parse_error(
      "author_id,paper_id,citations\n"
      "a,p1,3\na,p2,-1\n");
  EXPECT_EQ(e.row(), 3u);
  EXPECT_EQ(e.column(), "citations");
  EXPECT_NE(std::string(e.what()).find("negative citation count"),
            std::string::npos);
}

TEST(ReadCorpus, DuplicateRowsNameBothRows) {
  const auto e = parse_error(
      "author_id,paper_id,citations\n"
      "a,p1,3\nb,p1,1\na,p1,5\n");
  EXPECT_EQ(e.row(), 4u);
  EXPECT_NE(std::string(e.what()).find("(a, p1) at rows 2 and 4"),
            std::string::npos);
}

TEST(ReadCorpus, MalformedInputs) {
  EXPECT_EQ(parse_error("author_id,paper_id\na,p1\n").row(), 1u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations,extra\n").row(), 1u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations,citations\n").row(), 1u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations\na,p1\n").row(), 2u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations\na,p1,x\n").row(), 2u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations\na,p1,1.5\n").row(), 2u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations\na,p1,\n").row(), 2u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations\na b,p1,2\n").row(), 2u);
  EXPECT_EQ(parse_error("author_id,paper_id,citations\na,p1,2\n\na,p2,1\n").row(),
            3u);
  EXPECT_EQ(
      parse_error("author_id,paper_id,citations,field_id\na,p1,2,\n").row(), 2u);
}

TEST(ReadCorpus, HeaderOnlyIsEmpty) {
  EXPECT_TRUE(parse("author_id,paper_id,citations\n").empty());
}

TEST(ReadBaselines, ParsesAndValidates) {
  std::istringstream good("field_id,pub_year,mean_citations\nf,2000,2.5\n");
  EXPECT_EQ(read_baselines(good).expected("f", 2000), 2.5);
  std::istringstream zero("field_id,pub_year,mean_citations\nf,2000,0\n");
  EXPECT_THROW(read_baselines(zero), ParseError);
  std::istringstream dup(
      "field_id,pub_year,mean_citations\nf,2000,1\nf,2000,2\n");
  EXPECT_THROW(read_baselines(dup), ParseError);
}

TEST(WriteCorpus, RoundTripsThroughText) {
  GeneratorConfig config;
  config.n_authors = 40;
  config.seed = 3;
  config.metadata = MetadataConfig{};
  const auto corpus = generate_corpus(config);
  std::ostringstream papers, baselines;
  write_papers(papers, corpus);
  write_baselines(baselines, *corpus.baselines());
  std::istringstream papers_in(papers.str()), baselines_in(baselines.str());
  const auto reread = read_corpus(papers_in, &baselines_in);
  EXPECT_EQ(reread, corpus);
}

TEST(WriteCorpus, RejectsMixedMetadata) {
  std::vector<PaperRecord> dated{{"p1", 1, "f", 2000}};
  std::vector<PaperRecord> bare{{"p1", 1, {}, {}}};
  const Corpus corpus({CitationProfile("a", dated), CitationProfile("b", bare)});
  std::ostringstream out;
  EXPECT_THROW(write_papers(out, corpus), ValidationError);
}

TEST(Indicators, HeaderOnlyForEmptyInput) {
  std::ostringstream out;
  write_indicators(out, std::span<const IndicatorVector>{});
  EXPECT_EQ(out.str(), "author_id,p,c,mc,h,e,r,rm,ncs,mncs,iota_e\n");
}

TEST(Indicators, SortedAndReadable) {
  std::vector<IndicatorVector> rows{
      {"b", 2, 11, 5.5, 1, 3, std::sqrt(10.0), 1.7, std::nullopt, std::nullopt,
       std::sqrt(101.0)},
      {"a", 1, 0, 0, 0, 0, 0, 0, 1.25, 1.25, 0}};
  std::ostringstream out;
  write_indicators(out, rows);
  EXPECT_EQ(out.str(),
            "author_id,p,c,mc,h,e,r,rm,ncs,mncs,iota_e\n"
            "a,1,0,0,0,0,0,0,1.25,1.25,0\n"
            "b,2,11,5.5,1,3,3.16228,1.7,,,10.0499\n");
  std::istringstream in(out.str());
  const auto back = read_indicators(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].ncs, 1.25);
  EXPECT_FALSE(back[1].ncs.has_value());
  EXPECT_EQ(back[1].iota_e, 10.0499);
}

TEST(Atomic, ReplacesTargetWithoutLeftovers) {
  const auto dir = std::filesystem::temp_directory_path() / "citemetrics_atomic";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto target = dir / "out.txt";
  write_file_atomic(target, "first");
  write_file_atomic(target, "second");
  std::ifstream in(target);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, "second");
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir), {}), 1);
  EXPECT_THROW(write_file_atomic(dir / "missing" / "x.txt", "y"),
               std::runtime_error);
  std::filesystem::remove_all(dir);
}
