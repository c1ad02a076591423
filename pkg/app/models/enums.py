"""
枚举定义
"""
from enum import Enum


# ---------------------------------------------------------------------------
# 共轭类相关
# ---------------------------------------------------------------------------

class ClassFamily(str, Enum):
    """共轭类族（按类表的行顺序）"""
    A = "A"   # 中心元 (1, 0, z)
    B = "B"   # 非中心的 Heisenberg 元
    C = "C"   # s = -1
    D = "D"   # 分裂环面 diag(nu^k, nu^-k)
    E = "E"   # -1 乘幂幺，单位根 -1
    F = "F"   # -1 乘幂幺，非平方参数
    G = "G"   # 非分裂环面 b^m
    H = "H"   # 幂幺 [[1,0],[1,1]]
    I = "I"   # 幂幺 [[1,0],[nu,1]]
    L = "L"   # H 型矩阵 + 非零向量
    M = "M"   # I 型矩阵 + 非零向量


# ---------------------------------------------------------------------------
# 特征标相关
# ---------------------------------------------------------------------------

class CharacterFamily(str, Enum):
    """特征标族（按最终表的行顺序）"""
    TRIV = "triv"
    ETA1 = "eta1"
    ETA2 = "eta2"
    XI1 = "xi1"
    XI2 = "xi2"
    THETA = "theta"
    PSI = "psi"
    CHI = "chi"
    KAPPA0 = "kappa0"
    KAPPA_1 = "kappa_1"
    KAPPA_NU = "kappa_nu"
    OMEGA = "omega"
    OMEGA_ETA1 = "omega_eta1"
    OMEGA_ETA2 = "omega_eta2"
    OMEGA_XI1 = "omega_xi1"
    OMEGA_XI2 = "omega_xi2"
    OMEGA_THETA = "omega_theta"
    OMEGA_PSI = "omega_psi"
    OMEGA_CHI = "omega_chi"


# ---------------------------------------------------------------------------
# CLI 相关
# ---------------------------------------------------------------------------

class CommandName(str, Enum):
    """子命令"""
    GEN = "gen"
    CLASSES = "classes"
    SUMS = "sums"
    VERIFY = "verify"
    ORACLE = "oracle"


class OutputFormat(str, Enum):
    """输出格式"""
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"
    TEXT = "text"


class VerifySuite(str, Enum):
    """校验套件"""
    ORTHOGONALITY = "orthogonality"
    WEIL = "weil"
    KAPPA = "kappa"
    DEGREES = "degrees"
    GAUSS = "gauss"
    CLASSES = "classes"
    INDUCED = "induced"
    ORACLE = "oracle"
