#pragma once

// Citation strings carried by report lines so that a failing check can be
// traced back to the statement it exercises.
namespace mforge::cite {

inline constexpr const char* kFlexible = "Lemma (3.2)";
inline constexpr const char* kMoufang = "Lemma (3.3)";
inline constexpr const char* kInverse = "Lemma (3.6)";
inline constexpr const char* kAlternative = "Def. (3.1)";
inline constexpr const char* kDoubling = "Lemma (3.26)(c)";
inline constexpr const char* kMinimumEquation = "Prop. (3.31)";
inline constexpr const char* kComposition = "Lemma (3.38)";
inline constexpr const char* kNormSplitting = "Lemma (4.25)";
inline constexpr const char* kHuaClosedForm = "Lemma (4.5)";
inline constexpr const char* kHuaScaling = "Lemma (4.7)";
inline constexpr const char* kSmallDimField = "Theorem (4.12)";
inline constexpr const char* kInvolutorySet = "Def. (5.1)";
inline constexpr const char* kQuadTypes = "Def. (5.4)";
inline constexpr const char* kIndifferentSet = "Def. (6.1)";
inline constexpr const char* kIndifferentOpposite = "Lemma (6.4)";
inline constexpr const char* kPseudoQuadratic = "Def. (7.1)";
inline constexpr const char* kGroupT = "Cor. (7.9)";
inline constexpr const char* kCentralT = "Lemma (7.11)";
inline constexpr const char* kHuaT = "Def. (7.17)";
inline constexpr const char* kHuaAut = "Lemma (7.19)";
inline constexpr const char* kJordanIso = "Remark (7.18)";
inline constexpr const char* kReverseDirection = "Thm (14.2)";
inline constexpr const char* kSwitchUp = "Lemma (15.2)";
inline constexpr const char* kSwitchDown = "Lemma (15.3)";
inline constexpr const char* kF4Hua = "Lemma (16.5)";
inline constexpr const char* kF4Jordan = "Cor. (16.6)";
inline constexpr const char* kQ8 = "Lemma (16.8)";
inline constexpr const char* kF4Outer = "Remark (16.9)";
inline constexpr const char* kTriangle = "Def. (18.1)";
inline constexpr const char* kTriangleOpposite = "Lemma (18.4)";
inline constexpr const char* kTriangleHua = "Lemma (18.9)";
inline constexpr const char* kFoundation = "Def. (19.1)";
inline constexpr const char* kResidue = "Def. (19.2)";
inline constexpr const char* kReparametrization = "Def. (19.17)";
inline constexpr const char* kMoufangFoundation = "Lemma (19.27)(a)";
inline constexpr const char* kGlueingSign = "Def. (19.28)";
inline constexpr const char* kA3Negative = "Prop. (19.29)";
inline constexpr const char* kHuaTheorem = "Thm (19.31)";
inline constexpr const char* kCover = "Def. (20.2)";
inline constexpr const char* kCanonical = "Lemma (20.6)";
inline constexpr const char* kDefiningField = "Thm (21.6)";
inline constexpr const char* kPsiProduct = "Lemma (21.15)(a)";
inline constexpr const char* kGammaW = "Lemma (21.21)";
inline constexpr const char* kTetrahedron = "Prop. (21.24)";
inline constexpr const char* kOctonionFoundations = "Thm (21.25)";
inline constexpr const char* kParity = "Lemma (23.4)";
inline constexpr const char* kMaximalPositive = "Thm (23.7)";
inline constexpr const char* kTreeOfResidues = "Prop. (23.8)";
inline constexpr const char* kD4 = "Lemma (24.2)";
inline constexpr const char* kNoBranches = "Thm (24.3)";
inline constexpr const char* kSimplyLaced = "Thm (25.1)";
inline constexpr const char* kNormIsometry = "Prop. (28.5)(c)";
inline constexpr const char* kSigmaCentral = "Cor. (28.6)";
inline constexpr const char* kPsiPhi = "Notation (28.11)";
inline constexpr const char* kNeither = "Remark (28.12)";
inline constexpr const char* kSpecialPair = "Def. (28.17)";
inline constexpr const char* kSpecialPairLemma = "Lemma (28.19)";
inline constexpr const char* kMoufangSet = "Remark (29.2)";
inline constexpr const char* kJordanMoufang = "Def. (29.5)";
inline constexpr const char* kLinearFamily = "Ex. (30.1)";
inline constexpr const char* kInvolutoryFamily = "Ex. (30.2)";
inline constexpr const char* kIndifferentFamily = "Ex. (30.3)";
inline constexpr const char* kQuadraticFamily = "Ex. (30.4)";
inline constexpr const char* kPseudoFamily = "Ex. (30.5)";
inline constexpr const char* kOctonionJordan = "Thm (31.2)";
inline constexpr const char* kSmallDimCoincide = "Lemma (31.11)";
inline constexpr const char* kNormCoincide = "Lemma (31.23)";
inline constexpr const char* kParametrizedPolygon = "Def. (32.3)";
inline constexpr const char* kPolygonOpposite = "Def. (32.10)";
inline constexpr const char* kTriangleReparam = "Lemma (18.7)";
inline constexpr const char* kInvolutoryHua = "Lemma (33.2)";
inline constexpr const char* kPseudoHua = "Lemma (33.4)";
inline constexpr const char* kQuadraticHua = "Lemma (33.6)";
inline constexpr const char* kIndifferentHua = "Lemma (33.8)";
inline constexpr const char* kOppositeSystem = "Def. (32.8)";
inline constexpr const char* kInvolutoryQuadrangle = "Def. (33.1)";
inline constexpr const char* kPseudoQuadrangle = "Def. (33.3)";
inline constexpr const char* kQuadraticQuadrangle = "Def. (33.5)";
inline constexpr const char* kIndifferentQuadrangle = "Def. (33.7)";
inline constexpr const char* kEn = "Thm (40.2)";
inline constexpr const char* kF4Type = "Thm (41.2)";
inline constexpr const char* kIndifferentType = "Thm (42.2)";
inline constexpr const char* kPseudo443 = "Thm (43.14)";
inline constexpr const char* kInvolutory443 = "Thm (43.21)";
inline constexpr const char* kQuadratic443 = "Thm (44.6)";
inline constexpr const char* k443 = "Thm (45.1)";
inline constexpr const char* kSameSpace = "Cor. (45.3)";

}  // namespace mforge::cite
