"""
Java text of the generated classes.

Templates are jinja2 templates with plain ``{{ field }}`` substitutions. A
literal written as ``#2#`` marks a hiding site: the emitter replaces it with
the literal itself or with an F call evaluating to it. ``#L<n>#`` marks a
literal too large for F, hidden only as ``q + F(...)`` on request.

Formatting is fixed; golden tests compare the output byte for byte.
"""

from jinja2 import Environment, StrictUndefined

from arraymorph.core.kinds import RestructureOp

# Site markers may follow a brace, so jinja comments use other delimiters
_env = Environment(
    undefined=StrictUndefined,
    keep_trailing_newline=True,
    autoescape=False,
    comment_start_string="<#--",
    comment_end_string="--#>",
)

SPLIT_FULL = _env.from_string(
    """\
public class {{ cls }}
{
    {{ jtype }}[] {{ obj }}1;{{ jtype }}[] {{ obj }}2;{{ fields }}
    public {{ cls }}(int size )
    {
        if((size%#2#)==0)
            { {{ obj }}1= new {{ jtype }}[(int)(size/#2#)]; {{ obj }}2= new {{ jtype }}[(int)(size/#2#)];}
        else
            {int temp=(int)(size/2)+1;{{ obj }}1= new {{ jtype }}[temp];
            {{ obj }}2= new {{ jtype }}[size-temp];}{{ ctor_tail }}
    }
{{ members }}    public void setArray(int pos,{{ jtype }} elem)
    {
{{ remap }}        if((pos%#2#)==0)
            {{ obj }}1[(int)pos/#2#]=elem;
        else
            {{ obj }}2[(int)pos/#2#]=elem;
    }
    public {{ jtype }} getArray(int pos)
    {
{{ remap }}        if((pos%#2#)==0)
            return({{ obj }}1[(int)pos/#2#]);
        else
            return({{ obj }}2[(int)pos/#2#]);
    }
    public int lengthArray() {return({{ obj }}1.length+{{ obj }}2.length);}
}
"""
)

FOLDED_FULL = _env.from_string(
    """\
public class {{ cls }}
{
    {{ jtype }}[][] {{ obj }};int size;int cols;{{ fields }}
    public {{ cls }}(int size )
    {
        this.size=size;
        cols=#1#;
        while(cols*cols<size) cols++;
        {{ obj }}= new {{ jtype }}[(size+cols-#1#)/cols][cols];{{ ctor_tail }}
    }
{{ members }}    public void setArray(int pos,{{ jtype }} elem)
    {
        if(pos<#0#||pos>=size) throw new ArrayIndexOutOfBoundsException(pos);
{{ remap }}        {{ obj }}[pos/cols][pos%cols]=elem;
    }
    public {{ jtype }} getArray(int pos)
    {
        if(pos<#0#||pos>=size) throw new ArrayIndexOutOfBoundsException(pos);
{{ remap }}        return({{ obj }}[pos/cols][pos%cols]);
    }
    public int lengthArray() {return({{ obj }}.length*{{ obj }}[#0#].length);}
}
"""
)

FLATTENED_FULL = _env.from_string(
    """\
public class {{ cls }}
{
    {{ jtype }}[] {{ obj }};int rows;int cols;{{ fields }}
    public {{ cls }}(int rows,int cols )
    {
        if(cols<#1#) throw new IllegalArgumentException("cols");
        this.rows=rows;this.cols=cols;
        {{ obj }}= new {{ jtype }}[rows*cols];{{ ctor_tail }}
    }
{{ members }}    public void setArray(int row,int col,{{ jtype }} elem)
    {
        if(col<#0#||col>=cols) throw new ArrayIndexOutOfBoundsException(col);
        {{ obj }}[{{ flat }}]=elem;
    }
    public {{ jtype }} getArray(int row,int col)
    {
        if(col<#0#||col>=cols) throw new ArrayIndexOutOfBoundsException(col);
        return({{ obj }}[{{ flat }}]);
    }
    public int lengthArray() {return({{ obj }}.length);}
}
"""
)

STUB = _env.from_string(
    """\
public class {{ cls }} { public {{ cls }}({{ ctor_params }} ) {}
public void setArray({{ index_params }},{{ jtype }} elem){ }
public {{ jtype }} getArray({{ index_params }}){ return {{ default }};}
public int lengthArray() {return 0;}
}
"""
)

FULL_TEMPLATES = {
    RestructureOp.SPLIT: SPLIT_FULL,
    RestructureOp.FOLDED: FOLDED_FULL,
    RestructureOp.FLATTENED: FLATTENED_FULL,
}

# Index permutation pieces, spliced in when index obscuring is on
PERM_FIELDS = "int n;int k;"
PERM_CTOR_TAIL = _env.from_string(
    """
        n={{ length }};k=3;
        while(gcd(k,n)!=1) k+=2;"""
)
PERM_MEMBER = _env.from_string(
    """\
    private int perm(int pos)
    {
        if(pos<0||pos>=n) throw new ArrayIndexOutOfBoundsException(pos);
        return (int)(((long)k*pos+{{ offset }})%n);
    }
"""
)
PERM_REMAP = "        pos=perm(pos);\n"
GCD_HELPER = """\
    private static int gcd(int a,int b)
    {
        while(b!=0) {int t=a%b;a=b;b=t;}
        return a;
    }
"""

# Expression giving the number of logical elements inside the constructor
LENGTH_EXPRESSIONS = {
    RestructureOp.SPLIT: "size",
    RestructureOp.FOLDED: "size",
    RestructureOp.FLATTENED: "rows*cols",
}

# Constructor parameters and accessor index parameters
STUB_PARAMETERS = {
    RestructureOp.SPLIT: ("int size", "int pos"),
    RestructureOp.FOLDED: ("int size", "int pos"),
    RestructureOp.FLATTENED: ("int rows,int cols", "int row,int col"),
}
