def f_gold ( s ) :
    parts = s . split ( ',' )
    return ', '.join ( p . strip ( ) for p in parts if p )
