"""错误类型模块

定义 flagdesigns 中使用的全部异常类型。
输入类错误继承 ValueError（命令行返回码 2），
内部或数据一致性错误继承 RuntimeError。
"""


class InputError(ValueError):
    """参数或输入文件格式错误"""


class SubgroupAbsentError(ValueError):
    """请求的子群类在当前 q 下不存在"""


class NotAutomorphismError(ValueError):
    """某个生成元不保持区组集合"""


class DataIntegrityError(RuntimeError):
    """内置数据（Mathieu 生成元等）未通过校验"""


class InternalConsistencyError(RuntimeError):
    """不可达分支或后置条件被破坏，说明程序本身有缺陷"""


class VerificationError(RuntimeError):
    """命名的子检查失败

    属性:
        check: 失败的子检查名称
    """

    def __init__(self, check: str, message: str) -> None:
        super().__init__(f"{check}: {message}")
        self.check = check
