from pydantic import BaseModel, Field


class FieldDescription(BaseModel):
    """有限域描述"""
    model_config = {"frozen": True}

    p: int = Field(..., description="特征")
    f: int = Field(..., description="扩张次数")
    q: int = Field(..., description="域的阶 p^f")
    modulus: list[int] = Field(..., description="首一不可约模多项式，系数低次到高次")
    nu: list[int] = Field(..., description="乘法群生成元的系数向量")
