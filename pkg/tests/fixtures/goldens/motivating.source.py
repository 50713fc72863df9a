def f_gold ( x ) :
    s = 0
    while ( x != 0 ) :
        s += x % 10
        x = x // 10
    return s


if __name__ == '__main__' :
    print ( f_gold ( 9875 ) )
