"""
Domain Exceptions
领域异常

所有异常都携带 user_message（可直接展示给 CLI 用户）与 error_type（稳定的错误码）。
"""


class HeisCharError(Exception):
    """领域异常基类"""

    error_type: str = "HEISCHAR_ERROR"

    def __init__(
        self,
        dev_message: str,
        user_message: str | None = None,
        error_type: str | None = None,
    ):
        super().__init__(dev_message)
        self.dev_message = dev_message
        self.user_message = user_message or dev_message
        if error_type:
            self.error_type = error_type


# ============ 有限域 ============

class NotPrimeError(HeisCharError):
    """p 不是素数 / q 不是素数幂"""
    error_type = "NOT_PRIME"


class EvenCharacteristicError(HeisCharError):
    """特征为 2"""
    error_type = "EVEN_CHARACTERISTIC"


class ReducibleModulusError(HeisCharError):
    """给定的模多项式可约"""
    error_type = "REDUCIBLE_MODULUS"


class InvalidModulusError(HeisCharError):
    """模多项式不是首一或次数不符"""
    error_type = "INVALID_MODULUS"


# ============ 通用算术 ============

class ZeroArgumentError(HeisCharError):
    """参数为零（求逆、Legendre 符号、Gauss 和等）"""
    error_type = "ZERO_ARGUMENT"


class ContextMismatchError(HeisCharError):
    """两个操作数属于不同的域 / 分圆域上下文"""
    error_type = "CONTEXT_MISMATCH"


class VerificationFailedError(HeisCharError):
    """构造过程中内部不变量被破坏"""
    error_type = "VERIFICATION_FAILED"
